#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "dumas/census.hpp"
#include "dumas/constants.hpp"
#include "dumas/criteria.hpp"
#include "dumas/newton.hpp"
#include "dumas/poly.hpp"

namespace dumas {

// Locale-independent rendering at 15 significant digits.
inline std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", value);
  return buffer;
}

inline nlohmann::json to_json(const NewtonPoint& pt) {
  return nlohmann::json::array({pt.i, pt.alpha});
}

inline nlohmann::json to_json(const NewtonDiagram& diagram) {
  auto pack = [](const std::vector<NewtonPoint>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const NewtonPoint& pt : pts) arr.push_back(to_json(pt));
    return arr;
  };
  return nlohmann::json{{"prime", diagram.prime},
                        {"points", pack(diagram.points)},
                        {"hull_vertices", pack(diagram.hull_vertices)},
                        {"subdivided_vertices", pack(diagram.subdivided_vertices)},
                        {"segment_count", diagram.segment_count}};
}

// Verdict plus the diagram at the witness prime (or, unsatisfied, at the
// last candidate that was inspected); null when no diagram applies.
inline nlohmann::json verdict_to_json(const Polynomial& f,
                                      const CriterionVerdict& verdict,
                                      const std::vector<std::int64_t>& candidates) {
  nlohmann::json out;
  out["satisfied"] = verdict.satisfied;
  out["witness_prime"] = verdict.witness_prime
                             ? nlohmann::json(*verdict.witness_prime)
                             : nlohmann::json(nullptr);
  out["reason"] = verdict.satisfied ? nlohmann::json(nullptr)
                                    : nlohmann::json(to_string(verdict.reason));
  out["diagram"] = nlohmann::json(nullptr);
  if (f.degree() >= 1 && f.constant_term() != 0) {
    std::int64_t prime = 0;
    if (verdict.witness_prime)
      prime = *verdict.witness_prime;
    else if (!candidates.empty())
      prime = candidates.back();
    if (prime >= 2) out["diagram"] = to_json(newton_diagram(f, prime));
  }
  return out;
}

inline std::string census_csv_header() { return "n,H,kind,count,total,density"; }

inline std::string census_csv_row(const CensusResult& r) {
  return std::to_string(r.degree) + "," + std::to_string(r.height) + "," +
         to_string(r.kind) + "," + r.count.to_string() + "," +
         r.total.to_string() + "," + format_double(r.density());
}

inline nlohmann::json to_json(const CensusResult& r) {
  return nlohmann::json{{"n", r.degree},
                        {"H", r.height},
                        {"kind", to_string(r.kind)},
                        {"count", r.count.to_string()},
                        {"total", r.total.to_string()},
                        {"density", r.density()}};
}

inline std::string constants_csv_header() {
  return "n,tau,eisenstein_lower,ref_upper,ref_lower,dev_upper,dev_lower,"
         "prime_limit";
}

inline std::string constants_csv_row(const ConstantsRow& row) {
  std::string out = std::to_string(row.n) + "," + format_double(row.tau) + "," +
                    format_double(row.eisenstein_lower) + ",";
  if (row.ref_upper) out += format_double(*row.ref_upper);
  out += ",";
  if (row.ref_lower) out += format_double(*row.ref_lower);
  out += ",";
  if (row.ref_upper) out += format_double(std::fabs(row.tau - *row.ref_upper));
  out += ",";
  if (row.ref_lower)
    out += format_double(std::fabs(row.eisenstein_lower - *row.ref_lower));
  out += "," + std::to_string(row.prime_limit);
  return out;
}

inline nlohmann::json to_json(const ConstantsRow& row) {
  nlohmann::json out;
  out["n"] = row.n;
  out["tau"] = row.tau;
  out["eisenstein_lower"] = row.eisenstein_lower;
  out["ref_upper"] = row.ref_upper ? nlohmann::json(*row.ref_upper)
                                   : nlohmann::json(nullptr);
  out["ref_lower"] = row.ref_lower ? nlohmann::json(*row.ref_lower)
                                   : nlohmann::json(nullptr);
  out["dev_upper"] = row.ref_upper
                         ? nlohmann::json(std::fabs(row.tau - *row.ref_upper))
                         : nlohmann::json(nullptr);
  out["dev_lower"] = row.ref_lower
                         ? nlohmann::json(
                               std::fabs(row.eisenstein_lower - *row.ref_lower))
                         : nlohmann::json(nullptr);
  out["prime_limit"] = row.prime_limit;
  return out;
}

// Terminal sketch of the diagram: 'Q' subdivided vertices, '*' remaining
// points, rows are valuations top-down.
inline std::string render_diagram_text(const NewtonDiagram& diagram) {
  std::string out;
  out += "prime: " + std::to_string(diagram.prime) + "\n";
  auto list = [&out](const char* label, const std::vector<NewtonPoint>& pts) {
    out += label;
    for (const NewtonPoint& pt : pts)
      out += " (" + std::to_string(pt.i) + "," + std::to_string(pt.alpha) + ")";
    out += "\n";
  };
  list("points:", diagram.points);
  list("hull_vertices:", diagram.hull_vertices);
  list("subdivided_vertices:", diagram.subdivided_vertices);
  out += "segment_count: " + std::to_string(diagram.segment_count) + "\n";

  std::int64_t max_alpha = 0;
  std::int64_t max_i = 0;
  for (const NewtonPoint& pt : diagram.points) {
    max_alpha = std::max(max_alpha, pt.alpha);
    max_i = std::max(max_i, pt.i);
  }
  auto vertex_at = [&](std::int64_t i, std::int64_t alpha) {
    for (const NewtonPoint& pt : diagram.subdivided_vertices)
      if (pt.i == i && pt.alpha == alpha) return true;
    return false;
  };
  auto point_at = [&](std::int64_t i, std::int64_t alpha) {
    for (const NewtonPoint& pt : diagram.points)
      if (pt.i == i && pt.alpha == alpha) return true;
    return false;
  };
  char label[16];
  for (std::int64_t alpha = max_alpha; alpha >= 0; --alpha) {
    std::snprintf(label, sizeof label, "%3lld |",
                  static_cast<long long>(alpha));
    out += label;
    for (std::int64_t i = 0; i <= max_i; ++i) {
      out += ' ';
      if (vertex_at(i, alpha))
        out += 'Q';
      else if (point_at(i, alpha))
        out += '*';
      else
        out += '.';
    }
    out += "\n";
  }
  out += "    +";
  for (std::int64_t i = 0; i <= max_i; ++i) out += "--";
  out += "\n     ";
  for (std::int64_t i = 0; i <= max_i; ++i) {
    out += ' ';
    out += static_cast<char>('0' + i % 10);
  }
  out += "\n";
  return out;
}

}  // namespace dumas
