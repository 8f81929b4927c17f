#include "gitstab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "gitstab/virtual_profile.hpp"

namespace gitstab {

namespace {

struct Frame {
  double x_max = 1;
  double y_max = 1;
};

Frame frame_for(const MultFiltration& mf, const XTildeProfile& xt) {
  Frame fr;
  const double end = static_cast<double>(xt.stages.back().codim_bound);
  fr.x_max = std::max(end + std::max(static_cast<double>(mf.v), 0.1 * end), 1.0);
  fr.y_max = std::max(to_double(xt.stages.front().weight) * 1.05, 1e-9);
  return fr;
}

// Weight of the staircase at codimension x.
double step_at(const XTildeProfile& xt, double x) {
  double w = to_double(xt.stages.front().weight);
  for (const auto& st : xt.stages) {
    if (static_cast<double>(st.codim_bound) <= x) w = to_double(st.weight);
    else break;
  }
  return w;
}

double virtual_at(const std::vector<Vertex>& vs, double x) {
  for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
    const double x0 = to_double(vs[k].codim), x1 = to_double(vs[k + 1].codim);
    if (x <= x1) {
      if (x1 == x0) return to_double(vs[k + 1].weight);
      const double t = (x - x0) / (x1 - x0);
      return to_double(vs[k].weight) + t * (to_double(vs[k + 1].weight) - to_double(vs[k].weight));
    }
  }
  return to_double(vs.back().weight);
}

double nice_step(double span, int target) {
  const double raw = span / std::max(target, 1);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (m * mag >= raw) return m * mag;
  return 10 * mag;
}

}  // namespace

std::string render_svg(const MultFiltration& mf, const XTildeProfile& xt) {
  const Frame fr = frame_for(mf, xt);
  const double W = 640, H = 400, L = 60, R = 20, T = 20, B = 40;
  auto px = [&](double x) { return L + (W - L - R) * x / fr.x_max; };
  auto py = [&](double y) { return H - B - (H - T - B) * y / fr.y_max; };
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n", W,
                H, W, H);
  out += buf;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf, "<path d=\"M%.2f %.2f H%.2f M%.2f %.2f V%.2f\" stroke=\"black\" fill=\"none\"/>\n", px(0),
                py(0), px(fr.x_max), px(0), py(0), py(fr.y_max));
  out += buf;

  const double xs = nice_step(fr.x_max, 10), ys = nice_step(fr.y_max, 6);
  for (double x = 0; x <= fr.x_max + 1e-9; x += xs) {
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>"
                  "<text x=\"%.2f\" y=\"%.2f\" font-size=\"10\" text-anchor=\"middle\">%g</text>\n",
                  px(x), py(0), px(x), py(0) + 4, px(x), py(0) + 16, x);
    out += buf;
  }
  for (double y = 0; y <= fr.y_max + 1e-9; y += ys) {
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>"
                  "<text x=\"%.2f\" y=\"%.2f\" font-size=\"10\" text-anchor=\"end\">%g</text>\n",
                  px(0) - 4, py(y), px(0), py(y), px(0) - 6, py(y) + 3, y);
    out += buf;
  }

  std::string path = "<path fill=\"#dde6f0\" stroke=\"#24476b\" d=\"";
  std::snprintf(buf, sizeof buf, "M%.2f %.2f", px(0), py(0));
  path += buf;
  for (std::size_t s = 0; s < xt.stages.size(); ++s) {
    const double x0 = static_cast<double>(xt.stages[s].codim_bound);
    const double x1 = s + 1 < xt.stages.size() ? static_cast<double>(xt.stages[s + 1].codim_bound) : fr.x_max;
    const double y = to_double(xt.stages[s].weight);
    std::snprintf(buf, sizeof buf, " L%.2f %.2f L%.2f %.2f", px(x0), py(y), px(x1), py(y));
    path += buf;
  }
  std::snprintf(buf, sizeof buf, " L%.2f %.2f Z\"/>\n", px(fr.x_max), py(0));
  out += path + buf;

  const auto vs = virtual_vertices(mf);
  std::string poly = "<polyline fill=\"none\" stroke=\"#b03020\" stroke-width=\"1.5\" points=\"";
  for (const auto& vx : vs) {
    std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(to_double(vx.codim)), py(to_double(vx.weight)));
    poly += buf;
  }
  out += poly + "\"/>\n";
  for (const auto& vx : vs) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"#b03020\"/>\n", px(to_double(vx.codim)),
                  py(to_double(vx.weight)));
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

std::string render_ascii(const MultFiltration& mf, const XTildeProfile& xt, int columns, int rows) {
  const Frame fr = frame_for(mf, xt);
  const int label = 10;
  const int plot_w = std::max(10, std::min(columns, 120) - label - 1);
  rows = std::max(rows, 5);
  std::vector<std::string> grid(rows, std::string(plot_w, ' '));
  const auto vs = virtual_vertices(mf);
  auto row_of = [&](double y) {
    const int r = static_cast<int>(std::lround((1.0 - y / fr.y_max) * (rows - 1)));
    return std::clamp(r, 0, rows - 1);
  };
  for (int c = 0; c < plot_w; ++c) {
    const double x = fr.x_max * (c + 0.5) / plot_w;
    const int rs = row_of(step_at(xt, x));
    for (int r = rs + 1; r < rows; ++r) grid[r][c] = '.';
    grid[rs][c] = '#';
    if (x <= to_double(vs.back().codim)) grid[row_of(virtual_at(vs, x))][c] = '*';
  }
  std::string out;
  char buf[32];
  for (int r = 0; r < rows; ++r) {
    const double y = fr.y_max * (1.0 - static_cast<double>(r) / (rows - 1));
    if (r % 4 == 0 || r == rows - 1)
      std::snprintf(buf, sizeof buf, "%*.3g", label, y);
    else
      std::snprintf(buf, sizeof buf, "%*s", label, "");
    out += buf;
    out += '|';
    out += grid[r];
    out += '\n';
  }
  out += std::string(label, ' ') + '+' + std::string(plot_w, '-') + '\n';
  std::snprintf(buf, sizeof buf, "%-12g", 0.0);
  std::string axis = std::string(label + 1, ' ') + buf;
  std::snprintf(buf, sizeof buf, "%g", fr.x_max);
  const std::string right = buf;
  if (static_cast<int>(axis.size() + right.size()) < label + 1 + plot_w)
    axis += std::string(label + 1 + plot_w - axis.size() - right.size(), ' ');
  out += axis + right + '\n';
  std::snprintf(buf, sizeof buf, "%.4g", fr.x_max / plot_w);
  out += "# X~ profile   * virtual profile   downsampled: one column = " + std::string(buf) + " codim\n";
  return out;
}

}  // namespace gitstab
