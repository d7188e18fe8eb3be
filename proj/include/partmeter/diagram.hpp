#ifndef PARTMETER_DIAGRAM_HPP
#define PARTMETER_DIAGRAM_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "partmeter/composition.hpp"

namespace partmeter {

/* Adjacency-box picture of sac(n, m): compositions as rows, the least at the
 * top and [n] at the bottom, part positions as columns. A box is a
 * maximal vertical run of equal parts in one column over consecutive rows;
 * each box stands for one write during generation.
 */
struct BoxDiagram {
  struct Box {
    std::size_t column;
    std::size_t first_row;  // topmost row of the run
    std::size_t height;
    Part value;
  };

  std::vector<std::vector<Part>> rows;  // top to bottom, increasing
  std::vector<Box> boxes;

  std::size_t box_count() const { return boxes.size(); }
  std::size_t columns() const;
};

BoxDiagram layout_boxes(SacParams params);

std::string render_ascii(const BoxDiagram& diagram);
std::string render_svg(const BoxDiagram& diagram, std::string_view caption = {});

}  // namespace partmeter

#endif
