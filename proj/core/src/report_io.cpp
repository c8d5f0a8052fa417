#include "wigner/report_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace wigner {

namespace {

using nlohmann::ordered_json;

ordered_json parse(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ValidationError("malformed JSON report");
  return j;
}

}  // namespace

std::string to_json_string(const AdmissibilityReport& r, int indent) {
  ordered_json j{
      {"norm", r.norm},
      {"min_spatial_density", r.min_spatial_density},
      {"min_velocity_marginal", r.min_velocity_marginal},
      {"purity", r.purity},
      {"purity_bound", r.purity_bound},
      {"flags",
       {{"normalized", r.flags.normalized},
        {"spatial_density_nonneg", r.flags.spatial_density_nonneg},
        {"velocity_marginal_nonneg", r.flags.velocity_marginal_nonneg},
        {"purity_within_bound", r.flags.purity_within_bound}}},
  };
  return j.dump(indent);
}

AdmissibilityReport admissibility_report_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  try {
    AdmissibilityReport r;
    r.norm = j.at("norm").get<double>();
    r.min_spatial_density = j.at("min_spatial_density").get<double>();
    r.min_velocity_marginal = j.at("min_velocity_marginal").get<double>();
    r.purity = j.at("purity").get<double>();
    r.purity_bound = j.at("purity_bound").get<double>();
    const auto& f = j.at("flags");
    r.flags.normalized = f.at("normalized").get<bool>();
    r.flags.spatial_density_nonneg = f.at("spatial_density_nonneg").get<bool>();
    r.flags.velocity_marginal_nonneg = f.at("velocity_marginal_nonneg").get<bool>();
    r.flags.purity_within_bound = f.at("purity_within_bound").get<bool>();
    return r;
  } catch (const ordered_json::exception&) {
    throw ValidationError("admissibility report JSON is missing fields");
  }
}

std::string to_json_string(const ResidualReport& r, int indent) {
  ordered_json j{
      {"form", r.form},
      {"max_abs_residual", r.max_abs_residual},
      {"location", {{"q", r.location.q}, {"p", r.location.p}}},
      {"grid",
       {{"nq", r.grid.nq},
        {"np", r.grid.np},
        {"q_margin", r.grid.q_margin},
        {"q_half", r.grid.q_half},
        {"p_mult", r.grid.p_mult},
        {"fd_step", r.grid.fd_step}}},
  };
  return j.dump(indent);
}

ResidualReport residual_report_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  try {
    ResidualReport r;
    r.form = j.at("form").get<std::string>();
    r.max_abs_residual = j.at("max_abs_residual").get<double>();
    r.location.q = j.at("location").at("q").get<double>();
    r.location.p = j.at("location").at("p").get<double>();
    const auto& g = j.at("grid");
    r.grid.nq = g.at("nq").get<int>();
    r.grid.np = g.at("np").get<int>();
    r.grid.q_margin = g.at("q_margin").get<double>();
    r.grid.q_half = g.at("q_half").get<double>();
    r.grid.p_mult = g.at("p_mult").get<double>();
    r.grid.fd_step = g.at("fd_step").get<double>();
    return r;
  } catch (const ordered_json::exception&) {
    throw ValidationError("residual report JSON is missing fields");
  }
}

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) os << ',';
    os << header[i];
  }
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << format_full(row[i]);
    }
    os << '\n';
  }
}

void write_field_csv(std::ostream& os, const Field2D& field) {
  os << "q,p,F\n";
  for (int iq = 0; iq < field.nq; ++iq)
    for (int ip = 0; ip < field.np; ++ip)
      os << format_full(field.q(iq)) << ',' << format_full(field.p(ip)) << ','
         << format_full(field.at(iq, ip)) << '\n';
}

void write_field_binary(std::ostream& os, const Field2D& field, double dt, double t_final,
                        const std::string& parameters_json) {
  ordered_json params = parameters_json.empty()
                            ? ordered_json(nullptr)
                            : ordered_json::parse(parameters_json, nullptr, false);
  ordered_json header{
      {"nq", field.nq},
      {"np", field.np},
      {"half_width_q", field.half_width_q},
      {"half_width_p", field.half_width_p},
      {"dt", dt},
      {"t_final", t_final},
      {"layout", "row-major, q slow, little-endian float64"},
      {"parameters", params},
  };
  os << header.dump() << '\n';
  os.write(reinterpret_cast<const char*>(field.data.data()),
           static_cast<std::streamsize>(field.data.size() * sizeof(double)));
}

}  // namespace wigner
