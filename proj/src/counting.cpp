#include "partmeter/counting.hpp"

namespace partmeter {

template class BasicMemoTable<CountValue, 0>;
template class BasicMemoTable<NarrowCount, 0>;

CountValue nac(NacTable& table, SacParams params) { return table.get(params); }

CountValue nac(SacParams params) {
  NacTable table;
  return table.get(params);
}

CountValue partition_count(NacTable& table, Part n) { return table.get(SacParams(n, 1)); }

CountValue partition_count(Part n) { return nac(SacParams(n, 1)); }

}  // namespace partmeter
