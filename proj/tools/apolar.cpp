#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apolar/apolar.hpp"

#ifndef APOLAR_VERSION
#define APOLAR_VERSION "0.0.0"
#endif

namespace {

enum Exit { ok = 0, negative = 1, input_error = 2, unsupported = 3 };

struct Outcome {
  int code = ok;
  std::string out, err;
  nlohmann::ordered_json doc;
};

Outcome analyze_file(const std::string& path, bool json) {
  Outcome o;
  try {
    const apolar::Report r = apolar::analyze(apolar::load_input(path));
    if (json) {
      o.doc = apolar::to_json(r);
      o.out = o.doc.dump(2) + "\n";
    } else {
      o.out = apolar::to_text(r);
    }
  } catch (const apolar::InputError& e) {
    o.code = input_error;
    o.err = path;
    if (e.line()) o.err += ":" + std::to_string(e.line());
    if (e.column()) o.err += ":" + std::to_string(e.column());
    o.err += ": error: " + std::string(e.what()) + "\n";
  } catch (const apolar::ContractViolation& e) {
    o.code = input_error;
    o.err = path + ": error: " + e.what() + "\n";
  } catch (const apolar::Unsupported& e) {
    o.code = unsupported;
    o.err = path + ": " + e.what() + "\n";
  }
  return o;
}

int emit(const Outcome& o) {
  std::cout << o.out;
  std::cerr << o.err;
  return o.code;
}

int run_batch(const std::string& dir, bool json) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    std::cerr << dir << ": error: not a directory\n";
    return input_error;
  }
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, analyze_file, f, json));
  int code = ok;
  auto all = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Outcome o = jobs[i].get();
    const std::string name = fs::path(files[i]).filename().string();
    code = std::max(code, o.code);
    std::cerr << o.err;
    if (json) {
      nlohmann::ordered_json entry{{"file", name}};
      if (o.code == ok)
        entry["report"] = o.doc;
      else
        entry["error"] = o.err.substr(0, o.err.find_last_not_of('\n') + 1);
      all.push_back(std::move(entry));
    } else {
      std::cout << "== " << name << " ==\n" << o.out;
    }
  }
  if (json) std::cout << all.dump(2) << "\n";
  return code;
}

std::optional<apolar::HVector> parse_hvector(std::string text) {
  std::erase_if(text, [](char c) { return c == '(' || c == ')' || c == ' '; });
  std::vector<std::size_t> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return std::nullopt;
    v.push_back(std::stoul(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  try {
    return apolar::HVector(v);
  } catch (const apolar::ContractViolation&) {
    return std::nullopt;
  }
}

int cmd_construct(const std::string& text) {
  const auto h = parse_hvector(text);
  if (!h) {
    std::cerr << "error: malformed h-vector '" << text << "'\n";
    return input_error;
  }
  try {
    const auto rep = apolar::construct(*h);
    const apolar::VariableNames names(h->entries()[1]);
    std::cout << "hvector: " << to_string(rep.target) << "\n";
    std::cout << "construction: " << to_string(rep.tag) << "\n";
    std::cout << "generators:\n";
    for (const auto& g : rep.generators) std::cout << "  " << to_string(g, names) << "\n";
    std::cout << "homogeneous: " << (rep.homogeneous ? "yes" : "no") << "\n";
    std::cout << "verified_hvector: " << to_string(rep.verified_hvector) << "\n";
    std::cout << "level: " << (rep.verified_level ? "yes" : "no") << "\n";
    std::cout << "type: " << rep.verified_type << "\n";
    return ok;
  } catch (const apolar::Inadmissible& e) {
    std::cout << "inadmissible: " << e.what() << "\n";
    return negative;
  } catch (const apolar::Unsupported& e) {
    std::cerr << e.what() << "\n";
    return unsupported;
  }
}

int cmd_admissible(std::size_t m, unsigned s, std::optional<std::size_t> type) {
  try {
    for (const auto& e : apolar::enumerate_admissible(m, s, type)) {
      std::cout << to_string(e.h) << "  " << to_string(e.tag);
      if (!e.note.empty()) std::cout << "  # " << e.note;
      std::cout << "\n";
    }
    return ok;
  } catch (const apolar::Unsupported& e) {
    std::cerr << e.what() << "\n";
    return unsupported;
  } catch (const apolar::ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
}

int cmd_module_equal(const std::string& a, const std::string& b) {
  try {
    const auto fa = apolar::load_input(a), fb = apolar::load_input(b);
    if (fa.names.size() != fb.names.size()) {
      std::cerr << "error: files declare different numbers of variables\n";
      return input_error;
    }
    const bool eq = apolar::module_equal(apolar::build(fa.polys, fa.names.size()), apolar::build(fb.polys, fb.names.size()));
    std::cout << (eq ? "yes" : "no") << "\n";
    return eq ? ok : negative;
  } catch (const apolar::InputError& e) {
    std::cerr << "error: line " << e.line() << ": " << e.what() << "\n";
    return input_error;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse systems, Hilbert functions and gradedness of Artinian level algebras"};
  app.set_version_flag("--version", std::string("apolar ") + APOLAR_VERSION);
  app.require_subcommand(1);

  std::string file, batch, format = "text";
  auto* analyze = app.add_subcommand("analyze", "Analyze the inverse system given in FILE");
  analyze->add_option("file", file, "Input file");
  analyze->add_option("--batch", batch, "Analyze every file in a directory");
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string hvec;
  auto* construct = app.add_subcommand("construct", "Build generators realizing an h-vector such as 1,4,5,6");
  construct->add_option("hvector", hvec, "Comma separated h-vector")->required();

  std::size_t m = 0;
  unsigned socle = 0;
  std::optional<std::size_t> type;
  auto* admissible = app.add_subcommand("admissible", "List admissible level h-vectors");
  admissible->add_option("--m", m, "Embedding dimension")->required();
  admissible->add_option("--socle", socle, "Socle degree (1, 2 or 3)")->required();
  admissible->add_option("--type", type, "Restrict to this type");

  std::size_t n = 0;
  unsigned d = 0;
  auto* growth = app.add_subcommand("growth", "Macaulay bound n^<d>");
  growth->add_option("n", n)->required();
  growth->add_option("d", d)->required()->check(CLI::PositiveNumber);

  std::string file_a, file_b;
  auto* meq = app.add_subcommand("module-equal", "Do two files generate the same module");
  meq->add_option("a", file_a)->required();
  meq->add_option("b", file_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input_error;
  }

  if (*analyze) {
    const bool json = format == "json";
    if (file.empty() == batch.empty()) {
      std::cerr << "error: give exactly one of FILE or --batch DIR\n";
      return input_error;
    }
    return batch.empty() ? emit(analyze_file(file, json)) : run_batch(batch, json);
  }
  if (*construct) return cmd_construct(hvec);
  if (*admissible) return cmd_admissible(m, socle, type);
  if (*growth) {
    std::cout << apolar::macaulay_growth(n, d) << "\n";
    return ok;
  }
  return cmd_module_equal(file_a, file_b);
}
