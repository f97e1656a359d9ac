#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gafzeros/common.hpp"
#include "gafzeros/gauss.hpp"
#include "gafzeros/spectral.hpp"

namespace gafzeros::serialize {

using json = nlohmann::json;

// Spectral measures round-trip through the four tagged shapes:
//   {"type":"lebesgue"}
//   {"type":"atoms","angles":[...],"weights":[...]}
//   {"type":"arc","lo":l,"hi":h}
//   {"type":"density","nodes":[...],"values":[...]}
json measure_to_json(const spectral::SpectralMeasure& measure);
spectral::SpectralMeasure measure_from_json(const json& j);
std::string measure_to_json_string(const spectral::SpectralMeasure& measure);

// Polynomials carry split real/imaginary coefficient arrays plus provenance.
json polynomial_to_json(const gauss::GafPolynomial& poly);
gauss::GafPolynomial polynomial_from_json(const json& j);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

// Fixed shortest-round-trip formatting keeps emitted files byte-identical
// across runs with the same seed.
std::string format_double(double x);

// CSV row shape: run_id,seed,re,im,abs,class with class in {in,out,bd}.
struct ZeroRow {
  long run_id = 0;
  std::uint64_t seed = 0;
  cx z;
  std::string klass;
};

std::string zeros_csv(const std::vector<ZeroRow>& rows);

// CSV row shape: count,frequency (integer tallies, no normalization).
std::string histogram_csv(const std::vector<std::pair<long, long>>& tally);

// Scatter plot of zeros with the unit circle; inside red, outside blue,
// boundary black.
std::string zeros_svg(const std::vector<ZeroRow>& rows, double radius);

// Polyline chart of one or more sampled curves over a shared x grid.
struct Curve {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

std::string curves_svg(const std::vector<Curve>& curves, const std::string& x_label,
                       const std::string& y_label);

}  // namespace gafzeros::serialize
