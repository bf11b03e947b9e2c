#include "qp/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qp::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: LF stays LF everywhere
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

void finish_write(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

const char* region_name(gc::Region r) {
  switch (r) {
    case gc::Region::Inside: return "inside";
    case gc::Region::Outside: return "outside";
    default: return "boundary";
  }
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Positive: return "positive";
    case Verdict::NotPositive: return "not_positive";
    default: return "boundary";
  }
}

const char* branch_name(C4Branch b) {
  switch (b) {
    case C4Branch::First: return "first";
    case C4Branch::Second: return "second";
    default: return "none";
  }
}

ordered_json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

ordered_json json_number(const std::optional<double>& v) {
  return v ? json_number(*v) : ordered_json(nullptr);
}

ordered_json sample_to_json(const gc::RegionSample& s) {
  ordered_json j;
  j["eta3"] = s.params.eta3;
  j["eta4"] = s.params.eta4;
  j["verdict"] = region_name(s.verdict);
  j["m_minus"] = json_number(s.m_minus);
  j["d_m_minus"] = json_number(s.d_m_minus);
  return j;
}

// Recovered row-major lattice structure of a sample list.
struct Lattice {
  std::vector<double> eta4s;  // column coordinates, ascending
  std::vector<double> eta3s;  // row coordinates, ascending
};

Lattice lattice_of(const std::vector<gc::RegionSample>& samples) {
  Lattice lat;
  for (const auto& s : samples) {
    if (lat.eta3s.empty() || s.params.eta3 != lat.eta3s.back()) {
      lat.eta3s.push_back(s.params.eta3);
    }
  }
  if (samples.empty()) throw IncompleteGridError("region grid: no samples");
  const size_t ny = lat.eta3s.size();
  if (samples.size() % ny != 0) throw IncompleteGridError("region grid: ragged rows");
  const size_t nx = samples.size() / ny;
  if (nx < 2 || ny < 2) throw IncompleteGridError("region grid: needs at least 2x2");
  lat.eta4s.reserve(nx);
  for (size_t ix = 0; ix < nx; ++ix) lat.eta4s.push_back(samples[ix].params.eta4);
  for (size_t iy = 0; iy < ny; ++iy) {
    for (size_t ix = 0; ix < nx; ++ix) {
      const auto& pt = samples[iy * nx + ix].params;
      if (pt.eta4 != lat.eta4s[ix] || pt.eta3 != lat.eta3s[iy])
        throw IncompleteGridError("region grid: not a row-major lattice");
    }
  }
  if (!std::is_sorted(lat.eta4s.begin(), lat.eta4s.end()) ||
      !std::is_sorted(lat.eta3s.begin(), lat.eta3s.end()))
    throw IncompleteGridError("region grid: axes not ascending");
  return lat;
}

std::string svg_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string axis_label_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_region_csv(const std::vector<gc::RegionSample>& samples,
                      const std::string& path) {
  if (samples.empty()) throw EmptyInputError("write_region_csv: no samples");
  auto out = open_for_write(path);
  out << "eta3,eta4,verdict,m_minus,d_m_minus\n";
  for (const auto& s : samples) {
    out << format_double(s.params.eta3) << ',' << format_double(s.params.eta4) << ','
        << region_name(s.verdict) << ','
        << (s.m_minus ? format_double(*s.m_minus) : std::string()) << ','
        << (s.d_m_minus ? format_double(*s.d_m_minus) : std::string()) << '\n';
  }
  finish_write(out, path);
}

std::vector<gc::RegionSample> read_region_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "eta3,eta4,verdict,m_minus,d_m_minus")
    throw IoError("bad region csv header: " + path);
  std::vector<gc::RegionSample> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<std::string, 5> field;
    size_t start = 0;
    for (int i = 0; i < 5; ++i) {
      const size_t comma = line.find(',', start);
      if ((comma == std::string::npos) != (i == 4))
        throw IoError("bad region csv row: " + path);
      field[i] = line.substr(start, comma == std::string::npos ? comma : comma - start);
      start = comma + 1;
    }
    gc::RegionSample s{{std::strtod(field[0].c_str(), nullptr),
                        std::strtod(field[1].c_str(), nullptr)},
                       gc::Region::Outside,
                       std::nullopt,
                       std::nullopt};
    if (field[2] == "inside") s.verdict = gc::Region::Inside;
    else if (field[2] == "boundary") s.verdict = gc::Region::Boundary;
    else if (field[2] != "outside") throw IoError("bad verdict in csv: " + path);
    if (!field[3].empty()) s.m_minus = std::strtod(field[3].c_str(), nullptr);
    if (!field[4].empty()) s.d_m_minus = std::strtod(field[4].c_str(), nullptr);
    samples.push_back(s);
  }
  return samples;
}

void write_region_json(const std::vector<gc::RegionSample>& samples,
                       const gc::BoundaryCurve& curve,
                       const std::string& path) {
  if (samples.empty()) throw EmptyInputError("write_region_json: no samples");
  ordered_json doc;
  doc["samples"] = ordered_json::array();
  for (const auto& s : samples) doc["samples"].push_back(sample_to_json(s));
  doc["boundary"] = ordered_json::array();
  for (const auto& b : curve)
    doc["boundary"].push_back({{"eta4", b.eta4}, {"eta3_max", b.eta3_max}});
  auto out = open_for_write(path);
  out << doc.dump(2) << '\n';
  finish_write(out, path);
}

void write_region_svg(const std::vector<gc::RegionSample>& samples,
                      const gc::BoundaryCurve& curve,
                      const RegionPlotConfig& cfg,
                      const std::string& path) {
  if (cfg.width_px < 64 || cfg.height_px < 64)
    throw std::invalid_argument("write_region_svg: plot smaller than 64px");
  const Lattice lat = lattice_of(samples);
  const size_t nx = lat.eta4s.size(), ny = lat.eta3s.size();

  const double ml = 72, mr = 16, mt = 16, mb = 48;  // margins
  const double pw = cfg.width_px - ml - mr, ph = cfg.height_px - mt - mb;
  const double x0 = lat.eta4s.front(), x1 = lat.eta4s.back();
  const double y0 = lat.eta3s.front(), y1 = lat.eta3s.back();
  const auto px = [&](double eta4) { return ml + (eta4 - x0) / (x1 - x0) * pw; };
  const auto py = [&](double eta3) { return mt + (y1 - eta3) / (y1 - y0) * ph; };
  const double cw = pw / (nx - 1), ch = ph / (ny - 1);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << cfg.width_px << "\" height=\"" << cfg.height_px << "\" viewBox=\"0 0 "
      << cfg.width_px << " " << cfg.height_px << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << cfg.width_px << "\" height=\""
      << cfg.height_px << "\" fill=\"" << cfg.background_fill << "\"/>\n<g>\n";

  for (size_t iy = 0; iy < ny; ++iy) {
    for (size_t ix = 0; ix < nx; ++ix) {
      const auto& s = samples[iy * nx + ix];
      if (s.verdict == gc::Region::Outside) continue;
      const bool inside = s.verdict == gc::Region::Inside;
      svg << "<rect x=\"" << svg_num(px(lat.eta4s[ix]) - cw / 2) << "\" y=\""
          << svg_num(py(lat.eta3s[iy]) - ch / 2) << "\" width=\"" << svg_num(cw)
          << "\" height=\"" << svg_num(ch) << "\" fill=\""
          << (inside ? cfg.inside_fill : cfg.boundary_fill) << "\" class=\"cell "
          << (inside ? "inside" : "boundary") << "\"/>\n";
    }
  }
  svg << "</g>\n";

  if (cfg.draw_boundary_curve && !curve.empty()) {
    for (const double sign : {1.0, -1.0}) {
      svg << "<polyline fill=\"none\" stroke=\"#1c1c1c\" stroke-width=\"1.5\" points=\"";
      for (size_t i = 0; i < curve.size(); ++i) {
        if (i) svg << ' ';
        svg << svg_num(px(curve[i].eta4)) << ',' << svg_num(py(sign * curve[i].eta3_max));
      }
      svg << "\"/>\n";
    }
  }

  // axes with a handful of ticks
  svg << "<line x1=\"" << svg_num(ml) << "\" y1=\"" << svg_num(mt + ph) << "\" x2=\""
      << svg_num(ml + pw) << "\" y2=\"" << svg_num(mt + ph)
      << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n"
      << "<line x1=\"" << svg_num(ml) << "\" y1=\"" << svg_num(mt) << "\" x2=\""
      << svg_num(ml) << "\" y2=\"" << svg_num(mt + ph)
      << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i < kTicks; ++i) {
    const double fx = x0 + (x1 - x0) * i / (kTicks - 1);
    const double fy = y0 + (y1 - y0) * i / (kTicks - 1);
    svg << "<line x1=\"" << svg_num(px(fx)) << "\" y1=\"" << svg_num(mt + ph)
        << "\" x2=\"" << svg_num(px(fx)) << "\" y2=\"" << svg_num(mt + ph + 4)
        << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n"
        << "<text x=\"" << svg_num(px(fx)) << "\" y=\"" << svg_num(mt + ph + 18)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
        << axis_label_num(fx) << "</text>\n"
        << "<line x1=\"" << svg_num(ml - 4) << "\" y1=\"" << svg_num(py(fy))
        << "\" x2=\"" << svg_num(ml) << "\" y2=\"" << svg_num(py(fy))
        << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n"
        << "<text x=\"" << svg_num(ml - 8) << "\" y=\"" << svg_num(py(fy) + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
        << axis_label_num(fy) << "</text>\n";
  }
  svg << "<text x=\"" << svg_num(ml + pw / 2) << "\" y=\""
      << svg_num(mt + ph + 36)
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">η₄</text>\n"
      << "<text x=\"" << svg_num(18.0) << "\" y=\"" << svg_num(mt + ph / 2)
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 "
      << svg_num(18.0) << ' ' << svg_num(mt + ph / 2)
      << ")\">η₃</text>\n</svg>\n";

  auto out = open_for_write(path);
  out << svg.str();
  finish_write(out, path);
}

std::string certificate_json(const PositivityCertificate& cert) {
  ordered_json j;
  j["verdict"] = verdict_name(cert.verdict);
  if (cert.witness) {
    j["witness_m"] = json_number(cert.witness->m);
    j["h_shift"] = json_number(cert.witness->h_shift);
    j["g_coeffs"] = {json_number(cert.witness->g_coeffs[0]),
                     json_number(cert.witness->g_coeffs[1]),
                     json_number(cert.witness->g_coeffs[2])};
    j["g_max"] = json_number(cert.witness->g_max);
  } else {
    j["witness_m"] = nullptr;
    j["h_shift"] = nullptr;
    j["g_coeffs"] = nullptr;
    j["g_max"] = nullptr;
  }
  const auto& t = cert.trace;
  j["trace"] = {{"delta", json_number(t.discriminants.delta)},
                {"delta_d", json_number(t.discriminants.delta_d)},
                {"delta_p", json_number(t.discriminants.delta_p)},
                {"delta_q", json_number(t.discriminants.delta_q)},
                {"m_minus", json_number(t.m_minus)},
                {"m_plus", json_number(t.m_plus)},
                {"d_m_minus", json_number(t.d_m_minus)},
                {"d_m_plus", json_number(t.d_m_plus)},
                {"c4_branch", branch_name(t.c4_branch)},
                {"degenerate", t.degenerate}};
  return j.dump(2);
}

void write_certificate_json(const PositivityCertificate& cert,
                            const std::string& path) {
  auto out = open_for_write(path);
  out << certificate_json(cert) << '\n';
  finish_write(out, path);
}

std::string region_sample_json(const gc::RegionSample& sample) {
  return sample_to_json(sample).dump(2);
}

}  // namespace qp::io
