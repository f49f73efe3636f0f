#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace barbridge::cli {

namespace {

constexpr double kPanelWidth = 360;
constexpr double kGap = 24;
constexpr double kLeft = 16;
constexpr double kTop = 36;
constexpr double kRow = 12;
constexpr double kAxis = 34;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* color(Mark m) {
  switch (m) {
    case Mark::selected: return "#1f77b4";
    case Mark::baseline: return "#d62728";
    case Mark::offset: return "url(#hatch)";
  }
  return "#000";
}

void panel(const Panel& p, double x0, double height, std::string& out) {
  const PersistenceResult& r = *p.result;
  const ParameterScale& s = r.complex().scale();
  double hi = 0;
  for (const Bar& b : r.bars())
    hi = std::max(hi, b.death == r.infinity() ? s.value(b.birth) : s.value(b.death));
  if (hi <= 0) hi = s.size() ? std::max(s.value(s.size()), 1e-9) : 1;
  hi *= 1.08;
  const double width = kPanelWidth - 2 * kLeft;
  auto x = [&](double v) { return x0 + kLeft + width * std::clamp(v / hi, 0.0, 1.0); };
  const double right = x0 + kLeft + width;

  out += "<g>\n<text x=\"" + num(x0 + kLeft) + "\" y=\"20\" font-size=\"13\">" +
         escape(p.title) + "</text>\n";

  std::vector<const Bar*> order;
  for (const Bar& b : r.bars()) order.push_back(&b);
  std::stable_sort(order.begin(), order.end(), [](const Bar* a, const Bar* b) {
    return a->birth != b->birth ? a->birth < b->birth : a->death < b->death;
  });
  std::map<BarId, std::vector<const Highlight*>> marks;
  for (const Highlight& h : p.highlights) marks[h.bar].push_back(&h);

  double y = kTop;
  for (const Bar* b : order) {
    const double x1 = x(s.value(b->birth));
    const bool inf = b->death == r.infinity();
    const double x2 = inf ? right : x(s.value(b->death));
    out += "<rect x=\"" + num(x1) + "\" y=\"" + num(y) + "\" width=\"" +
           num(std::max(x2 - x1, 1.0)) + "\" height=\"" + num(kRow - 4) +
           "\" fill=\"#bbbbbb\"/>\n";
    if (inf)
      out += "<path d=\"M" + num(right) + " " + num(y - 1) + " L" + num(right + 6) + " " +
             num(y + (kRow - 4) / 2) + " L" + num(right) + " " + num(y + kRow - 3) +
             " Z\" fill=\"#bbbbbb\"/>\n";
    if (auto it = marks.find(b->id); it != marks.end())
      for (const Highlight* h : it->second) {
        const double hx = h->from ? std::max(x1, x(s.value(std::min(h->from, s.size())))) : x1;
        out += "<rect x=\"" + num(hx) + "\" y=\"" + num(y) + "\" width=\"" +
               num(std::max(x2 - hx, 1.0)) + "\" height=\"" + num(kRow - 4) + "\" fill=\"" +
               color(h->mark) + "\"/>\n";
      }
    y += kRow;
  }
  if (order.empty())
    out += "<text x=\"" + num(x0 + kLeft) + "\" y=\"" + num(kTop + 10) +
           "\" font-size=\"11\" fill=\"#666666\">no bars</text>\n";

  const double axis_y = height - kAxis + 8;
  out += "<line x1=\"" + num(x0 + kLeft) + "\" y1=\"" + num(axis_y) + "\" x2=\"" + num(right) +
         "\" y2=\"" + num(axis_y) + "\" stroke=\"#333333\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double v = hi / 1.08 * i / 4;
    out += "<line x1=\"" + num(x(v)) + "\" y1=\"" + num(axis_y) + "\" x2=\"" + num(x(v)) +
           "\" y2=\"" + num(axis_y + 4) + "\" stroke=\"#333333\"/>\n";
    out += "<text x=\"" + num(x(v)) + "\" y=\"" + num(axis_y + 16) +
           "\" font-size=\"10\" text-anchor=\"middle\">" + label(v) + "</text>\n";
  }
  out += "</g>\n";
}

}  // namespace

std::string render_barcodes(const std::vector<Panel>& panels) {
  std::size_t rows = 1;
  for (const Panel& p : panels) rows = std::max(rows, p.result->bars().size());
  const double height = kTop + kRow * static_cast<double>(rows) + kAxis;
  const double width = panels.size() * kPanelWidth + (panels.size() - 1) * kGap;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) +
         "\" font-family=\"sans-serif\">\n";
  out += "<defs><pattern id=\"hatch\" width=\"4\" height=\"4\" patternUnits=\"userSpaceOnUse\" "
         "patternTransform=\"rotate(45)\"><rect width=\"4\" height=\"4\" fill=\"#ffffff\"/>"
         "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"4\" stroke=\"#ff7f0e\" stroke-width=\"2\"/>"
         "</pattern></defs>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i)
    panel(panels[i], static_cast<double>(i) * (kPanelWidth + kGap), height, out);
  out += "</svg>\n";
  return out;
}

}  // namespace barbridge::cli
