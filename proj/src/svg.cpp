#include "polynorm/svg.hpp"

#include <algorithm>
#include <sstream>

#include "polynorm/algebra.hpp"
#include "polynorm/error.hpp"

namespace polynorm {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b"};
constexpr long kCell = 24;
constexpr long kMargin = 32;

}  // namespace

std::string render_svg(const std::vector<SvgLayer>& layers) {
  if (layers.empty()) throw Error(ErrorCode::InvalidParameter, "nothing to draw");
  long min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& layer : layers) {
    require_same_dim(2, layer.polytope.dim());
    for (const auto& v : layer.polytope.vertices()) {
      if (!v[0].fits_slong_p() || !v[1].fits_slong_p()) {
        throw Error(ErrorCode::InvalidParameter, "coordinates too large to draw");
      }
      min_x = std::min(min_x, v[0].get_si());
      max_x = std::max(max_x, v[0].get_si());
      min_y = std::min(min_y, v[1].get_si());
      max_y = std::max(max_y, v[1].get_si());
    }
  }
  const long width = (max_x - min_x) * kCell + 2 * kMargin;
  const long height = (max_y - min_y) * kCell + 2 * kMargin + 20 * static_cast<long>(layers.size());
  auto sx = [&](long x) { return kMargin + (x - min_x) * kCell; };
  auto sy = [&](long y) { return kMargin + (max_y - y) * kCell; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  for (long x = min_x; x <= max_x; ++x) {
    for (long y = min_y; y <= max_y; ++y) {
      svg << "  <circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"1.5\" fill=\"#bbb\"/>\n";
    }
  }
  svg << "  <circle cx=\"" << sx(0) << "\" cy=\"" << sy(0) << "\" r=\"3\" fill=\"#000\"/>\n";

  for (std::size_t i = 0; i < layers.size(); ++i) {
    const char* colour = kPalette[i % std::size(kPalette)];
    const Polytope& p = layers[i].polytope;
    if (p.is_point()) {
      const auto& v = p.vertices().front();
      svg << "  <circle cx=\"" << sx(v[0].get_si()) << "\" cy=\"" << sy(v[1].get_si())
          << "\" r=\"5\" fill=\"" << colour << "\"/>\n";
    } else {
      svg << "  <polygon points=\"";
      for (const auto& edge : edges_2d(p)) {
        svg << sx(edge.start[0].get_si()) << "," << sy(edge.start[1].get_si()) << " ";
      }
      svg << "\" fill=\"" << colour << "\" fill-opacity=\"0.15\" stroke=\"" << colour
          << "\" stroke-width=\"2\"/>\n";
    }
    const long legend_y = (max_y - min_y) * kCell + 2 * kMargin + 20 * static_cast<long>(i);
    svg << "  <text x=\"" << kMargin << "\" y=\"" << legend_y << "\" fill=\"" << colour
        << "\" font-family=\"monospace\" font-size=\"14\">" << layers[i].label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace polynorm
