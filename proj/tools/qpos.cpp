// qpos: strict-positivity checks for quartic polynomials, separation
// certificates, and Gram-Charlier valid-region queries and exports.
//
// Exit codes: 0 positive/inside, 1 not positive/outside, 2 boundary,
// 64 usage error, 70 internal failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qp/gram_charlier.hpp"
#include "qp/io.hpp"
#include "qp/quartic.hpp"

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNotPositive = 1;
constexpr int kExitBoundary = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

int verdict_exit(qp::Verdict v) {
  switch (v) {
    case qp::Verdict::Positive: return kExitPositive;
    case qp::Verdict::NotPositive: return kExitNotPositive;
    default: return kExitBoundary;
  }
}

int region_exit(qp::gc::Region r) {
  switch (r) {
    case qp::gc::Region::Inside: return kExitPositive;
    case qp::gc::Region::Outside: return kExitNotPositive;
    default: return kExitBoundary;
  }
}

const char* verdict_word(qp::Verdict v) {
  switch (v) {
    case qp::Verdict::Positive: return "Positive";
    case qp::Verdict::NotPositive: return "NotPositive";
    default: return "Boundary";
  }
}

const char* region_word(qp::gc::Region r) {
  switch (r) {
    case qp::gc::Region::Inside: return "Inside";
    case qp::gc::Region::Outside: return "Outside";
    default: return "Boundary";
  }
}

std::string num(double v) { return qp::io::format_double(v); }

void print_certificate_text(const qp::PositivityCertificate& cert) {
  std::cout << verdict_word(cert.verdict) << '\n';
  const auto& t = cert.trace;
  std::cout << "  delta=" << num(t.discriminants.delta)
            << " delta_d=" << num(t.discriminants.delta_d)
            << " delta_p=" << num(t.discriminants.delta_p)
            << " delta_q=" << num(t.discriminants.delta_q) << '\n'
            << "  m_minus=" << num(t.m_minus) << " m_plus=" << num(t.m_plus)
            << " d_m_minus=" << num(t.d_m_minus) << " d_m_plus=" << num(t.d_m_plus)
            << '\n';
  if (t.degenerate) std::cout << "  degenerate: low-degree input decided by its minimum\n";
  if (cert.witness) {
    const auto& w = *cert.witness;
    std::cout << "  witness: m=" << num(w.m) << " h_shift=" << num(w.h_shift)
              << " g=(" << num(w.g_coeffs[0]) << ")x^2+(" << num(w.g_coeffs[1])
              << ")x+(" << num(w.g_coeffs[2]) << ") g_max=" << num(w.g_max) << '\n';
  }
}

int emit_certificate(const qp::PositivityCertificate& cert, bool as_json) {
  if (as_json)
    std::cout << qp::io::certificate_json(cert) << '\n';
  else
    print_certificate_text(cert);
  return verdict_exit(cert.verdict);
}

bool all_finite(std::initializer_list<double> vs) {
  for (double v : vs)
    if (!std::isfinite(v)) return false;
  return true;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quartic positivity checks, separation certificates and "
               "Gram-Charlier valid-region exports"};
  app.require_subcommand(1);
  app.footer("exit codes: 0 positive/inside, 1 not positive/outside, "
             "2 boundary, 64 usage error");

  double a, b, c, d, e;
  double p, q, r;
  double eta3, eta4;
  bool json_check = false, json_reduced = false, json_gc = false;
  std::string cert_out;

  auto* cmd_check = app.add_subcommand("check", "decide a x^4 + b x^3 + c x^2 + d x + e > 0 for all x");
  cmd_check->add_option("a", a)->required();
  cmd_check->add_option("b", b)->required();
  cmd_check->add_option("c", c)->required();
  cmd_check->add_option("d", d)->required();
  cmd_check->add_option("e", e)->required();
  cmd_check->add_flag("--json", json_check, "print the certificate as JSON");

  auto* cmd_reduced = app.add_subcommand("check-reduced", "decide x^4 + p x^2 + q x + r > 0 for all x");
  cmd_reduced->add_option("p", p)->required();
  cmd_reduced->add_option("q", q)->required();
  cmd_reduced->add_option("r", r)->required();
  cmd_reduced->add_flag("--json", json_reduced, "print the certificate as JSON");

  auto* cmd_certify = app.add_subcommand("certify", "write the separation certificate for x^4 + p x^2 + q x + r");
  cmd_certify->add_option("p", p)->required();
  cmd_certify->add_option("q", q)->required();
  cmd_certify->add_option("r", r)->required();
  cmd_certify->add_option("--out", cert_out, "certificate path (stdout when omitted)");

  auto* cmd_gc = app.add_subcommand("gc", "Gram-Charlier density parameter region");
  cmd_gc->require_subcommand(1);

  auto* gc_check = cmd_gc->add_subcommand("check", "is (eta3, eta4) a valid density parameter pair");
  gc_check->add_option("eta3", eta3)->required();
  gc_check->add_option("eta4", eta4)->required();
  gc_check->add_flag("--json", json_gc, "print the verdict as JSON");

  double eta4_min = 0.0, eta4_max = 0.17, eta3_abs = 0.3;
  int nx = 200, ny = 200, boundary_samples = 0;
  double boundary_tol = 1e-9;
  std::string format = "svg", region_out;
  int width = 900, height = 620;
  auto* gc_region = cmd_gc->add_subcommand("region", "evaluate the valid region on a grid and export it");
  gc_region->add_option("--eta4-min", eta4_min, "left edge of the eta4 range")->capture_default_str();
  gc_region->add_option("--eta4-max", eta4_max, "right edge of the eta4 range")->capture_default_str();
  gc_region->add_option("--eta3-abs", eta3_abs, "grid covers |eta3| <= this")->capture_default_str();
  gc_region->add_option("--nx", nx, "eta4 grid points")->capture_default_str();
  gc_region->add_option("--ny", ny, "eta3 grid points")->capture_default_str();
  gc_region->add_option("--format", format, "csv, json or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}))
      ->capture_default_str();
  gc_region->add_option("--out", region_out, "output path (default region.<format>)");
  gc_region->add_option("--boundary-samples", boundary_samples,
                        "also trace the boundary curve at this many eta4 stations")
      ->capture_default_str();
  gc_region->add_option("--boundary-tol", boundary_tol, "bisection tolerance for the boundary curve")
      ->capture_default_str();
  gc_region->add_option("--width", width, "svg width in px")->capture_default_str();
  gc_region->add_option("--height", height, "svg height in px")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (cmd_check->parsed()) {
      if (!all_finite({a, b, c, d, e})) throw UsageError("coefficients must be finite");
      return emit_certificate(qp::is_positive_general({a, b, c, d, e}), json_check);
    }

    if (cmd_reduced->parsed()) {
      if (!all_finite({p, q, r})) throw UsageError("coefficients must be finite");
      return emit_certificate(qp::is_positive({p, q, r}), json_reduced);
    }

    if (cmd_certify->parsed()) {
      if (!all_finite({p, q, r})) throw UsageError("coefficients must be finite");
      const auto cert = qp::is_positive({p, q, r});
      if (cert_out.empty()) {
        std::cout << qp::io::certificate_json(cert) << '\n';
      } else {
        qp::io::write_certificate_json(cert, cert_out);
        std::cout << verdict_word(cert.verdict) << " -> " << cert_out << '\n';
      }
      return verdict_exit(cert.verdict);
    }

    if (gc_check->parsed()) {
      if (!all_finite({eta3, eta4})) throw UsageError("parameters must be finite");
      const auto sample = qp::gc::gc_in_region({eta3, eta4});
      if (json_gc) {
        std::cout << qp::io::region_sample_json(sample) << '\n';
      } else {
        std::cout << region_word(sample.verdict);
        if (sample.m_minus)
          std::cout << " (m_minus=" << num(*sample.m_minus)
                    << ", d_m_minus=" << num(*sample.d_m_minus) << ")";
        std::cout << '\n';
      }
      return region_exit(sample.verdict);
    }

    if (gc_region->parsed()) {
      if (!all_finite({eta4_min, eta4_max, eta3_abs}) || eta3_abs <= 0.0)
        throw UsageError("region ranges must be finite, eta3-abs positive");
      if (nx < 2 || ny < 2) throw UsageError("nx and ny must be at least 2");
      if (static_cast<long long>(nx) * ny > 10'000'000)
        throw UsageError("grid larger than 10^7 points");
      if (boundary_samples < 0) throw UsageError("boundary-samples must be >= 0");
      const auto samples =
          qp::gc::region_grid(eta4_min, eta4_max, -eta3_abs, eta3_abs, nx, ny);

      qp::gc::BoundaryCurve curve;
      if (boundary_samples > 0) {
        const double lo = std::max(eta4_min, 0.0);
        const double hi = std::min(eta4_max, 1.0 / 6.0);
        for (int k = 1; k <= boundary_samples; ++k) {
          const double station = lo + (hi - lo) * k / (boundary_samples + 1);
          if (station <= 0.0 || station >= 1.0 / 6.0) continue;
          curve.push_back({station, qp::gc::gc_boundary(station, boundary_tol)});
        }
      }

      if (region_out.empty()) region_out = "region." + format;
      if (format == "csv") {
        qp::io::write_region_csv(samples, region_out);
        if (!curve.empty()) {
          const std::string curve_path = region_out + ".boundary.csv";
          std::ofstream bc(curve_path, std::ios::binary);
          if (!bc) throw qp::io::IoError("cannot open for writing: " + curve_path);
          bc << "eta4,eta3_max\n";
          for (const auto& pt : curve)
            bc << num(pt.eta4) << ',' << num(pt.eta3_max) << '\n';
          std::cout << "boundary -> " << curve_path << '\n';
        }
      } else if (format == "json") {
        qp::io::write_region_json(samples, curve, region_out);
      } else {
        qp::io::RegionPlotConfig cfg;
        cfg.width_px = width;
        cfg.height_px = height;
        qp::io::write_region_svg(samples, curve, cfg, region_out);
      }
      std::cout << "region (" << nx << "x" << ny << ") -> " << region_out << '\n';
      return 0;
    }
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
