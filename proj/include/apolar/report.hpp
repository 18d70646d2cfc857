#ifndef APOLAR_REPORT_HPP
#define APOLAR_REPORT_HPP

#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "apolar/gradedness.hpp"
#include "apolar/inverse_system.hpp"
#include "apolar/multipoly.hpp"

namespace apolar {

/// Malformed input file; line and column are 1-based, 0 when not applicable.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& msg, std::size_t line, std::size_t column = 0)
      : std::runtime_error(msg), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Header "vars: m" or "vars: m as a,b,...", then one polynomial per line.
/// Blank lines and text after '#' are ignored.
struct InputFile {
  VariableNames names{0};
  std::vector<Poly> polys;
};

namespace detail {
inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline VariableNames parse_header(std::string_view body, std::size_t line) {
  if (body.substr(0, 5) != "vars:") throw InputError("expected header 'vars: m'", line, 1);
  std::string_view rest = trim(body.substr(5));
  std::size_t pos = 0;
  while (pos < rest.size() && std::isdigit(static_cast<unsigned char>(rest[pos]))) ++pos;
  if (pos == 0) throw InputError("expected variable count after 'vars:'", line);
  const std::size_t m = std::stoul(std::string(rest.substr(0, pos)));
  if (m == 0) throw InputError("variable count must be positive", line);
  rest = trim(rest.substr(pos));
  if (rest.empty()) return VariableNames(m);
  if (rest.substr(0, 3) != "as " && rest.substr(0, 3) != "as\t") throw InputError("expected 'as' before aliases", line);
  std::vector<std::string> names;
  std::string_view list = trim(rest.substr(3));
  while (true) {
    const auto comma = list.find(',');
    const std::string_view name = trim(list.substr(0, comma));
    if (name.empty()) throw InputError("empty variable alias", line);
    const bool ident = !std::isdigit(static_cast<unsigned char>(name[0])) &&
                       std::all_of(name.begin(), name.end(), [](char c) {
                         return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                       });
    if (!ident) throw InputError("variable alias '" + std::string(name) + "' is not an identifier", line);
    names.emplace_back(name);
    if (comma == std::string_view::npos) break;
    list = list.substr(comma + 1);
  }
  if (names.size() != m)
    throw InputError("header declares " + std::to_string(m) + " variables but lists " + std::to_string(names.size()),
                     line);
  try {
    return VariableNames(std::move(names));
  } catch (const std::exception& e) {
    throw InputError(e.what(), line);
  }
}
}  // namespace detail

inline InputFile parse_input(std::string_view text) {
  InputFile in;
  bool have_header = false;
  std::size_t lineno = 0;
  std::istringstream stream{std::string(text)};
  for (std::string raw; std::getline(stream, raw);) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (detail::trim(line).empty()) continue;
    if (!have_header) {
      in.names = detail::parse_header(detail::trim(line), lineno);
      have_header = true;
      continue;
    }
    Poly p(in.names.size());
    try {
      p = parse(line, in.names);
    } catch (const ParseError& e) {
      throw InputError(e.message(), lineno, e.column());
    }
    if (p.is_zero()) throw InputError("generator is zero", lineno);
    in.polys.push_back(std::move(p));
  }
  if (!have_header) throw InputError("empty input: missing 'vars:' header", 0);
  if (in.polys.empty()) throw InputError("no polynomials after the header", lineno);
  return in;
}

inline InputFile load_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path, 0);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_input(buf.str());
}

struct ReportOptions {
  /// Apolar generators are skipped when P_{<=s+1} has more monomials than this.
  std::size_t apolar_frame_limit = 2500;
  AssessOptions assess;
};

struct Report {
  VariableNames names{0};
  std::vector<Poly> generators;
  HVector hvector;
  std::size_t length = 0;
  std::size_t embedding_dim = 0;
  unsigned socle_degree = 0;
  std::size_t type = 0;
  bool is_level = false;
  std::optional<bool> is_compressed;
  HVector q0_hvector;
  std::vector<std::vector<std::size_t>> c_table, q_table;
  std::optional<std::vector<Poly>> apolar_generators;
  GradedStatus graded_status = GradedStatus::not_applicable;
  std::string graded_reason;
  std::optional<GradedCertificate> certificate;
  std::optional<NotGradedWitness> witness;
  std::vector<std::string> notes;
};

inline Report analyze(const InputFile& in, const ReportOptions& opt = {}) {
  Report r;
  r.names = in.names;
  r.generators = in.polys;
  const InverseSystem is = build(in.polys, in.names.size());
  r.hvector = hilbert_function(is);
  r.length = is.length();
  r.embedding_dim = r.hvector[1];
  r.socle_degree = is.socle_degree();
  const LevelInfo lvl = is_level(is);
  r.type = lvl.type;
  r.is_level = lvl.level;
  if (r.is_level && r.socle_degree == 3) r.is_compressed = is_compressed_s3(is);

  const QDecomposition qd = q_decomposition(is);
  r.c_table = qd.c;
  r.q_table = qd.q;
  std::vector<std::size_t> q0row = qd.q.front();
  while (q0row.size() > 1 && q0row.back() == 0) q0row.pop_back();
  r.q0_hvector = HVector(q0row);
  if (r.is_level) {
    const HVector direct = hilbert_function(q0(level_presentation(is)));
    if (direct != r.q0_hvector) throw std::logic_error("Q(0) from the filtration disagrees with the leading forms");
  }

  if (frame(is.num_vars(), r.socle_degree + 1, FrameMode::up_to_degree).size() <= opt.apolar_frame_limit) {
    r.apolar_generators = apolar_ideal_upto(is).minimal_generators;
  } else {
    r.notes.push_back("apolar generators skipped: P_{<=s+1} exceeds " + std::to_string(opt.apolar_frame_limit) +
                      " monomials");
  }

  const GradedAssessment ga = assess_gradedness(is, opt.assess);
  r.graded_status = ga.status;
  r.graded_reason = ga.detail.reason;
  r.certificate = ga.detail.certificate;
  r.witness = ga.detail.witness;
  return r;
}

namespace detail {
inline nlohmann::ordered_json hvector_json(const HVector& h) { return h.entries(); }

inline std::vector<std::string> poly_strings(const std::vector<Poly>& ps, const VariableNames& names) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p, names));
  return out;
}

inline std::vector<std::string> substitution_strings(const AutomorphismCoeffs& a, const VariableNames& names) {
  std::vector<std::string> out;
  for (std::size_t h = 0; h < a.m; ++h)
    out.push_back(names[h] + " -> " + to_string(Poly::variable(a.m, h) + a.tail(h), names));
  return out;
}
}  // namespace detail

inline nlohmann::ordered_json to_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = 1;
  j["variables"] = r.names.names();
  j["generators"] = detail::poly_strings(r.generators, r.names);
  j["hvector"] = detail::hvector_json(r.hvector);
  j["length"] = r.length;
  j["embedding_dim"] = r.embedding_dim;
  j["socle_degree"] = r.socle_degree;
  j["type"] = r.type;
  j["is_level"] = r.is_level;
  j["is_compressed"] = r.is_compressed ? ordered_json(*r.is_compressed) : ordered_json(nullptr);
  j["q0_hvector"] = detail::hvector_json(r.q0_hvector);
  j["c_table"] = r.c_table;
  j["q_table"] = r.q_table;
  j["apolar_generators"] =
      r.apolar_generators ? ordered_json(detail::poly_strings(*r.apolar_generators, r.names)) : ordered_json(nullptr);
  j["graded_status"] = to_string(r.graded_status);
  j["graded_reason"] = r.graded_reason;
  if (r.certificate) {
    std::vector<std::string> coeffs;
    for (const auto& q : r.certificate->coeffs.values) coeffs.push_back(to_string(q));
    j["certificate"] = {{"method", r.certificate->method},
                        {"verified", r.certificate->verified},
                        {"system_rank", r.certificate->system_rank},
                        {"coefficients", coeffs},
                        {"substitution", detail::substitution_strings(r.certificate->coeffs, r.names)}};
  } else {
    j["certificate"] = nullptr;
  }
  if (r.witness)
    j["witness"] = {{"hvector", detail::hvector_json(r.witness->hvector)},
                    {"q0_hvector", detail::hvector_json(r.witness->q0_hvector)}};
  else
    j["witness"] = nullptr;
  j["notes"] = r.notes;
  return j;
}

inline std::string to_text(const Report& r) {
  std::ostringstream o;
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  auto row = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  o << "variables: ";
  for (std::size_t i = 0; i < r.names.size(); ++i) o << (i ? ", " : "") << r.names[i];
  o << "\ngenerators:\n";
  for (const auto& g : r.generators) o << "  " << to_string(g, r.names) << "\n";
  o << "hvector: " << to_string(r.hvector) << "\n";
  o << "length: " << r.length << "\n";
  o << "embedding_dim: " << r.embedding_dim << "\n";
  o << "socle_degree: " << r.socle_degree << "\n";
  o << "type: " << r.type << "\n";
  o << "level: " << yes_no(r.is_level) << "\n";
  o << "compressed: " << (r.is_compressed ? yes_no(*r.is_compressed) : "n/a") << "\n";
  o << "q0_hvector: " << to_string(r.q0_hvector) << "\n";
  o << "c_table:\n";
  for (std::size_t a = 0; a < r.c_table.size(); ++a) o << "  C(" << a << "): " << row(r.c_table[a]) << "\n";
  o << "q_table:\n";
  for (std::size_t a = 0; a < r.q_table.size(); ++a) o << "  Q(" << a << "): " << row(r.q_table[a]) << "\n";
  o << "apolar_generators:";
  if (r.apolar_generators) {
    o << "\n";
    for (const auto& g : *r.apolar_generators) o << "  " << to_string(g, r.names) << "\n";
  } else {
    o << " skipped\n";
  }
  o << "graded: " << to_string(r.graded_status) << "\n";
  if (!r.graded_reason.empty()) o << "reason: " << r.graded_reason << "\n";
  if (r.witness)
    o << "witness: " << to_string(r.witness->hvector) << " vs Q(0) " << to_string(r.witness->q0_hvector) << "\n";
  if (r.certificate) {
    o << "certificate: " << r.certificate->method << ", rank " << r.certificate->system_rank << ", verified "
      << yes_no(r.certificate->verified) << "\n";
    for (const auto& s : detail::substitution_strings(r.certificate->coeffs, r.names)) o << "  " << s << "\n";
  }
  for (const auto& n : r.notes) o << "note: " << n << "\n";
  return o.str();
}

}  // namespace apolar

#endif  // APOLAR_REPORT_HPP
