#pragma once

#include <string>
#include <vector>

#include "qp/gram_charlier.hpp"
#include "qp/quartic.hpp"

// Deterministic serialization of verdicts, certificates, region grids and
// boundary curves.  All writers emit UTF-8 with LF line endings and are
// byte-stable for identical inputs; floats use 17 significant digits (CSV)
// or shortest-round-trip form (JSON), both of which reparse exactly.

namespace qp::io {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IncompleteGridError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Fig-style region plot: eta4 on the horizontal axis, eta3 on the vertical.
struct RegionPlotConfig {
  int width_px = 900;
  int height_px = 620;
  std::string inside_fill = "#3a6ea5";
  std::string boundary_fill = "#e8a33d";
  std::string background_fill = "#ffffff";
  bool draw_boundary_curve = true;
};

// CSV schema: header "eta3,eta4,verdict,m_minus,d_m_minus", one row per
// sample, verdicts "inside" / "outside" / "boundary", missing trace values
// as empty fields.  Throws EmptyInputError on an empty sample list and
// IoError (with the path in the message) on filesystem failures.
void write_region_csv(const std::vector<gc::RegionSample>& samples,
                      const std::string& path);

// Inverse of write_region_csv, for round-trip checks and downstream tools.
std::vector<gc::RegionSample> read_region_csv(const std::string& path);

// JSON document {"samples": [...], "boundary": [...]}; sample objects carry
// eta3, eta4, verdict, m_minus, d_m_minus (null when absent).
void write_region_json(const std::vector<gc::RegionSample>& samples,
                       const gc::BoundaryCurve& curve,
                       const std::string& path);

// Standalone SVG 1.1: filled cells for Inside, a distinct fill for Boundary,
// optional boundary polyline (mirrored in eta3), labeled axes.  The samples
// must form a complete row-major lattice; otherwise IncompleteGridError.
void write_region_svg(const std::vector<gc::RegionSample>& samples,
                      const gc::BoundaryCurve& curve,
                      const RegionPlotConfig& cfg,
                      const std::string& path);

// Certificate JSON: fields verdict ("positive" / "not_positive" /
// "boundary"), witness_m, h_shift, g_coeffs (array of 3), g_max (all null
// for witness-less verdicts) and trace with the eight condition scalars,
// the fired C4 branch and the degenerate flag.  Non-finite scalars
// serialize as null.
std::string certificate_json(const PositivityCertificate& cert);
void write_certificate_json(const PositivityCertificate& cert,
                            const std::string& path);

// One region sample as a JSON object (the gc check --json payload).
std::string region_sample_json(const gc::RegionSample& sample);

// "%.17g" (shortest distinguishing decimal never needs more).
std::string format_double(double v);

}  // namespace qp::io
