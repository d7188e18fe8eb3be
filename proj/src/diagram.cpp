#include "partmeter/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace partmeter {

namespace {

bool has_cell(const std::vector<std::vector<Part>>& rows, std::size_t r, std::size_t c) {
  return r < rows.size() && c < rows[r].size();
}

// Whether (r, c) continues the run of the cell above it.
bool joins_above(const std::vector<std::vector<Part>>& rows, std::size_t r, std::size_t c) {
  return r > 0 && has_cell(rows, r - 1, c) && rows[r - 1][c] == rows[r][c];
}

std::string escape_xml(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::size_t BoxDiagram::columns() const {
  std::size_t c = 0;
  for (const auto& r : rows) c = std::max(c, r.size());
  return c;
}

BoxDiagram layout_boxes(SacParams params) {
  BoxDiagram d;
  visit_compositions(params, [&](std::span<const Part> parts, std::size_t) {
    d.rows.emplace_back(parts.begin(), parts.end());
  });

  const std::size_t cols = d.columns();
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
      if (!has_cell(d.rows, r, c)) continue;
      if (joins_above(d.rows, r, c)) {
        ++d.boxes.back().height;
      } else {
        d.boxes.push_back({c, r, 1, d.rows[r][c]});
      }
    }
  }
  // Runs within a column are contiguous in `boxes`, so extending back() is safe.
  return d;
}

std::string render_ascii(const BoxDiagram& d) {
  const auto& rows = d.rows;
  if (rows.empty()) return {};
  Part widest = 0;
  for (const auto& r : rows)
    for (Part p : r) widest = std::max(widest, p);
  const std::size_t cell = std::to_string(widest).size() + 2;
  const std::size_t stride = cell + 1;
  const std::size_t cols = d.columns();

  std::vector<std::string> canvas(2 * rows.size() + 1, std::string(cols * stride + 1, ' '));

  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const std::size_t left = c * stride, right = left + stride;
      const std::size_t text = 2 * r + 1;
      canvas[text][left] = '|';
      canvas[text][right] = '|';
      std::string label = std::to_string(rows[r][c]);
      label = std::string(cell - 1 - label.size(), ' ') + label + ' ';
      canvas[text].replace(left + 1, cell, label);

      if (!joins_above(rows, r, c))
        std::fill_n(canvas[text - 1].begin() + static_cast<std::ptrdiff_t>(left + 1), cell, '-');
      const bool run_continues = has_cell(rows, r + 1, c) && joins_above(rows, r + 1, c);
      if (run_continues) {
        canvas[text + 1][left] = '|';
        canvas[text + 1][right] = '|';
      } else {
        std::fill_n(canvas[text + 1].begin() + static_cast<std::ptrdiff_t>(left + 1), cell, '-');
      }
    }
  }

  // Junctions touching a horizontal edge become corners.
  for (std::size_t y = 0; y < canvas.size(); y += 2) {
    for (std::size_t x = 0; x < canvas[y].size(); x += stride) {
      const bool west = x > 0 && canvas[y][x - 1] == '-';
      const bool east = x + 1 < canvas[y].size() && canvas[y][x + 1] == '-';
      if (west || east) canvas[y][x] = '+';
    }
  }

  std::string out;
  for (auto& line : canvas) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_svg(const BoxDiagram& d, std::string_view caption) {
  constexpr int kCell = 28;
  constexpr int kMargin = 8;
  constexpr int kCaption = 24;
  const int width = static_cast<int>(std::max<std::size_t>(d.columns(), 1)) * kCell + 2 * kMargin;
  const int grid_height = static_cast<int>(d.rows.size()) * kCell;
  const int height = grid_height + 2 * kMargin + (caption.empty() ? 0 : kCaption);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& b : d.boxes) {
    os << "<rect x=\"" << kMargin + static_cast<int>(b.column) * kCell << "\" y=\""
       << kMargin + static_cast<int>(b.first_row) * kCell << "\" width=\"" << kCell
       << "\" height=\"" << static_cast<int>(b.height) * kCell << "\"/>\n";
  }
  os << "</g>\n";
  os << "<g font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">\n";
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    for (std::size_t c = 0; c < d.rows[r].size(); ++c) {
      os << "<text x=\"" << kMargin + static_cast<int>(c) * kCell + kCell / 2 << "\" y=\""
         << kMargin + static_cast<int>(r) * kCell + kCell / 2 + 5 << "\">" << d.rows[r][c]
         << "</text>\n";
    }
  }
  os << "</g>\n";
  if (!caption.empty()) {
    os << "<text x=\"" << kMargin << "\" y=\"" << grid_height + kMargin + kCaption - 4
       << "\" font-family=\"monospace\" font-size=\"12\">" << escape_xml(caption) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace partmeter
