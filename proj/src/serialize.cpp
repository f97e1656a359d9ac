#include "gafzeros/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gafzeros::serialize {

json measure_to_json(const spectral::SpectralMeasure& measure) {
  using Kind = spectral::SpectralMeasure::Kind;
  json j;
  switch (measure.kind()) {
    case Kind::Lebesgue:
      j["type"] = "lebesgue";
      break;
    case Kind::Atoms:
      j["type"] = "atoms";
      j["angles"] = measure.angles();
      j["weights"] = measure.weights();
      break;
    case Kind::ArcUniform:
      j["type"] = "arc";
      j["lo"] = measure.lo();
      j["hi"] = measure.hi();
      break;
    case Kind::TabulatedDensity:
      j["type"] = "density";
      j["nodes"] = measure.density_nodes();
      j["values"] = measure.density_values();
      break;
  }
  return j;
}

spectral::SpectralMeasure measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw std::invalid_argument("measure JSON must be an object with a string 'type'");
  }
  const std::string type = j["type"].get<std::string>();
  if (type == "lebesgue") {
    return spectral::SpectralMeasure::lebesgue();
  }
  if (type == "atoms") {
    if (!j.contains("angles") || !j.contains("weights")) {
      throw std::invalid_argument("atoms measure requires 'angles' and 'weights'");
    }
    return spectral::SpectralMeasure::atoms(j["angles"].get<std::vector<double>>(),
                                            j["weights"].get<std::vector<double>>());
  }
  if (type == "arc") {
    if (!j.contains("lo") || !j.contains("hi")) {
      throw std::invalid_argument("arc measure requires 'lo' and 'hi'");
    }
    return spectral::SpectralMeasure::arc_uniform(j["lo"].get<double>(),
                                                  j["hi"].get<double>());
  }
  if (type == "density") {
    if (!j.contains("nodes") || !j.contains("values")) {
      throw std::invalid_argument("density measure requires 'nodes' and 'values'");
    }
    return spectral::SpectralMeasure::tabulated_density(
        j["nodes"].get<std::vector<double>>(), j["values"].get<std::vector<double>>());
  }
  throw std::invalid_argument("unknown measure type: " + type);
}

std::string measure_to_json_string(const spectral::SpectralMeasure& measure) {
  return measure_to_json(measure).dump();
}

json polynomial_to_json(const gauss::GafPolynomial& poly) {
  std::vector<double> re(poly.coefficients.size()), im(poly.coefficients.size());
  for (std::size_t k = 0; k < poly.coefficients.size(); ++k) {
    re[k] = poly.coefficients[k].real();
    im[k] = poly.coefficients[k].imag();
  }
  json j;
  j["n"] = poly.n;
  j["re"] = re;
  j["im"] = im;
  j["provenance"] = {{"measure", json::parse(poly.provenance.measure_json)},
                     {"sampler", poly.provenance.sampler},
                     {"seed", poly.provenance.seed}};
  return j;
}

gauss::GafPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("re") || !j.contains("im")) {
    throw std::invalid_argument("polynomial JSON requires 'n', 're', 'im'");
  }
  gauss::GafPolynomial poly;
  poly.n = j["n"].get<long>();
  const auto re = j["re"].get<std::vector<double>>();
  const auto im = j["im"].get<std::vector<double>>();
  if (re.size() != im.size() || static_cast<long>(re.size()) != poly.n + 1) {
    throw std::invalid_argument("polynomial JSON arrays must have length n + 1");
  }
  poly.coefficients.resize(re.size());
  for (std::size_t k = 0; k < re.size(); ++k) {
    poly.coefficients[k] = cx(re[k], im[k]);
  }
  if (j.contains("provenance")) {
    const json& p = j["provenance"];
    if (p.contains("measure")) poly.provenance.measure_json = p["measure"].dump();
    if (p.contains("sampler")) poly.provenance.sampler = p["sampler"].get<std::string>();
    if (p.contains("seed")) poly.provenance.seed = p["seed"].get<std::uint64_t>();
  }
  return poly;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[40];
  // Shortest representation that round-trips, preferring plain decimal
  // notation where it is no longer than scientific.
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string zeros_csv(const std::vector<ZeroRow>& rows) {
  std::string out = "run_id,seed,re,im,abs,class\n";
  for (const ZeroRow& row : rows) {
    out += std::to_string(row.run_id);
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += format_double(row.z.real());
    out += ',';
    out += format_double(row.z.imag());
    out += ',';
    out += format_double(std::abs(row.z));
    out += ',';
    out += row.klass;
    out += '\n';
  }
  return out;
}

std::string histogram_csv(const std::vector<std::pair<long, long>>& tally) {
  std::string out = "count,frequency\n";
  for (const auto& [count, freq] : tally) {
    out += std::to_string(count);
    out += ',';
    out += std::to_string(freq);
    out += '\n';
  }
  return out;
}

namespace {

// Maps the square [-lim, lim]^2 onto a 640x640 canvas, y axis flipped.
struct SquareMap {
  double lim;
  double px(double x) const { return 320.0 + 300.0 * x / lim; }
  double py(double y) const { return 320.0 - 300.0 * y / lim; }
};

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string zeros_svg(const std::vector<ZeroRow>& rows, double radius) {
  double lim = radius;
  for (const ZeroRow& row : rows) lim = std::max(lim, std::abs(row.z));
  lim = std::min(1.1 * lim, 4.0 * radius);

  SquareMap map{lim};
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
      "viewBox=\"0 0 640 640\">\n"
      "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
  out += "<circle cx=\"320\" cy=\"320\" r=\"" + svg_num(300.0 * radius / lim) +
         "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  for (const ZeroRow& row : rows) {
    if (std::abs(row.z) > lim) continue;
    const char* fill = row.klass == "in"    ? "#d62728"
                       : row.klass == "out" ? "#1f77b4"
                                            : "#000000";
    out += "<circle cx=\"" + svg_num(map.px(row.z.real())) + "\" cy=\"" +
           svg_num(map.py(row.z.imag())) + "\" r=\"2\" fill=\"" + fill + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string curves_svg(const std::vector<Curve>& curves, const std::string& x_label,
                       const std::string& y_label) {
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  bool first = true;
  for (const Curve& c : curves) {
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      if (first) {
        xmin = xmax = c.x[i];
        ymin = ymax = c.y[i];
        first = false;
      } else {
        xmin = std::min(xmin, c.x[i]);
        xmax = std::max(xmax, c.x[i]);
        ymin = std::min(ymin, c.y[i]);
        ymax = std::max(ymax, c.y[i]);
      }
    }
  }
  if (xmax <= xmin) xmax = xmin + 1.0;
  if (ymax <= ymin) ymax = ymin + 1.0;

  const double x0 = 70.0, x1 = 610.0, y0 = 440.0, y1 = 40.0;
  auto px = [&](double x) { return x0 + (x1 - x0) * (x - xmin) / (xmax - xmin); };
  auto py = [&](double y) { return y0 + (y1 - y0) * (y - ymin) / (ymax - ymin); };

  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                   "#9467bd", "#ff7f0e", "#8c564b"};
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"660\" height=\"480\" "
      "viewBox=\"0 0 660 480\">\n"
      "<rect width=\"660\" height=\"480\" fill=\"white\"/>\n";
  out += "<line x1=\"70\" y1=\"440\" x2=\"610\" y2=\"440\" stroke=\"black\"/>\n";
  out += "<line x1=\"70\" y1=\"440\" x2=\"70\" y2=\"40\" stroke=\"black\"/>\n";
  out += "<text x=\"340\" y=\"470\" text-anchor=\"middle\" font-size=\"14\">" +
         x_label + "</text>\n";
  out += "<text x=\"20\" y=\"240\" text-anchor=\"middle\" font-size=\"14\" "
         "transform=\"rotate(-90 20 240)\">" +
         y_label + "</text>\n";
  out += "<text x=\"62\" y=\"444\" text-anchor=\"end\" font-size=\"11\">" +
         format_double(ymin) + "</text>\n";
  out += "<text x=\"62\" y=\"46\" text-anchor=\"end\" font-size=\"11\">" +
         format_double(ymax) + "</text>\n";
  out += "<text x=\"70\" y=\"458\" text-anchor=\"middle\" font-size=\"11\">" +
         format_double(xmin) + "</text>\n";
  out += "<text x=\"610\" y=\"458\" text-anchor=\"middle\" font-size=\"11\">" +
         format_double(xmax) + "</text>\n";

  for (std::size_t c = 0; c < curves.size(); ++c) {
    const Curve& curve = curves[c];
    if (curve.x.empty()) continue;
    const char* color = kPalette[c % 6];
    std::string points;
    for (std::size_t i = 0; i < curve.x.size(); ++i) {
      if (!points.empty()) points += ' ';
      points += svg_num(px(curve.x[i])) + "," + svg_num(py(curve.y[i]));
    }
    out += "<polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    out += "<text x=\"615\" y=\"" + svg_num(60.0 + 18.0 * static_cast<double>(c)) +
           "\" font-size=\"12\" fill=\"";
    out += color;
    out += "\">" + curve.label + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace gafzeros::serialize
