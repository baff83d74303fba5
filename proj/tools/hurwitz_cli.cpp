// Command-line front end for libhurwitz. Talks to the library purely
// through the C interface in hurwitz.h.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hurwitz.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct PresentationDeleter {
  void operator()(hrw_presentation* p) const { hrw_presentation_free(p); }
};
using PresentationPtr = std::unique_ptr<hrw_presentation, PresentationDeleter>;

struct StringDeleter {
  void operator()(char* s) const { hrw_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code_for(hrw_status status) {
  switch (status) {
    case HRW_OK:
      return kExitOk;
    case HRW_ERROR_USAGE:
    case HRW_ERROR_NO_ODD_PRIMES:
    case HRW_ERROR_SIZE_LIMIT:
    case HRW_ERROR_PRIME_IN_S:
    case HRW_ERROR_NOT_FOUND:
    case HRW_ERROR_PARSE:
    case HRW_ERROR_OVERFLOW:
      return kExitUsage;
    default:
      return kExitVerifyFailed;
  }
}

int fail(hrw_status status) {
  std::cerr << "error: " << hrw_last_error() << "\n";
  return exit_code_for(status);
}

std::vector<int64_t> parse_primes(const std::string& spec, bool& ok) {
  std::vector<int64_t> out;
  std::stringstream ss(spec);
  std::string item;
  ok = true;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      ok = false;
      return out;
    }
  }
  if (out.empty()) ok = false;
  return out;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

PresentationPtr load_from_file(const std::string& path, hrw_status& status) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    status = HRW_ERROR_USAGE;
    return nullptr;
  }
  hrw_presentation* raw = nullptr;
  status = hrw_parse_json(text.c_str(), &raw);
  return PresentationPtr(raw);
}

// Doubled coordinates -> readable quaternion.
std::string element_text(const int64_t* c) {
  bool halves = (c[0] % 2 + 2) % 2 != 0;
  static const char* names[4] = {"", "I", "J", "IJ"};
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    int64_t v = halves ? c[i] : c[i] / 2;
    if (v == 0) continue;
    if (first) {
      if (v < 0) out << "-";
      first = false;
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    int64_t a = v < 0 ? -v : v;
    if (a != 1 || i == 0) {
      out << a;
      if (i != 0) out << "*";
    }
    if (i != 0) out << names[i];
  }
  if (first) return "0";
  if (halves) return "(" + out.str() + ")/2";
  return out.str();
}

int run_present(const std::string& primes_spec, bool oracle, bool do_simplify, bool stats,
                const std::string& format, const std::string& out_path) {
  bool ok = false;
  auto primes = parse_primes(primes_spec, ok);
  if (!ok) {
    std::cerr << "error: --primes expects a comma-separated list, e.g. 3,5\n";
    return kExitUsage;
  }
  hrw_presentation* raw = nullptr;
  hrw_status status = oracle ? hrw_present_oracle(primes.data(), primes.size(), 0, &raw)
                             : hrw_present_main(primes.data(), primes.size(), &raw);
  if (status != HRW_OK) return fail(status);
  PresentationPtr p(raw);

  if (stats) {
    int64_t counts[4] = {0, 0, 0, 0};
    if (hrw_relation_type_counts(p.get(), counts) == HRW_OK)
      std::cerr << "Type 1+2: " << (counts[0] + counts[1]) << "\nType 3: " << counts[2]
                << "\nType 4: " << counts[3] << "\n";
    std::cerr << "generators: " << hrw_generator_count(p.get())
              << "\nrelators: " << hrw_relator_count(p.get()) << "\n";
  }

  if (do_simplify) {
    hrw_presentation* simplified = nullptr;
    status = hrw_simplify(p.get(), 0, 0, 0, &simplified);
    if (status != HRW_OK) return fail(status);
    p.reset(simplified);
    if (stats)
      std::cerr << "after simplify: " << hrw_generator_count(p.get()) << " generators, "
                << hrw_relator_count(p.get()) << " relators\n";
  }

  char* text = nullptr;
  status = hrw_export(p.get(), format.c_str(), &text);
  if (status != HRW_OK) return fail(status);
  StringPtr guard(text);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out << text;
  }
  return kExitOk;
}

int run_enumerate(int64_t norm) {
  int64_t* coords = nullptr;
  size_t count = 0;
  hrw_status status = hrw_elements_of_norm(norm, &coords, &count);
  if (status != HRW_OK) return fail(status);
  std::cout << count << "\n";
  for (size_t i = 0; i < count; ++i) std::cout << element_text(coords + 4 * i) << "\n";
  hrw_int64_array_free(coords);
  return kExitOk;
}

int run_verify(const std::string& fixture, const std::string& file) {
  PresentationPtr p;
  hrw_status status = HRW_OK;
  if (!fixture.empty()) {
    hrw_presentation* raw = nullptr;
    status = hrw_fixture(fixture.c_str(), &raw);
    p.reset(raw);
  } else {
    p = load_from_file(file, status);
  }
  if (!p) return fail(status);

  int pass = 0;
  char* report = nullptr;
  status = hrw_verify(p.get(), &pass, &report);
  if (status != HRW_OK) return fail(status);
  StringPtr guard(report);
  std::cout << report << "\n";
  return pass ? kExitOk : kExitVerifyFailed;
}

int run_abelianize(const std::string& primes_spec, const std::string& file, bool oracle) {
  PresentationPtr p;
  hrw_status status = HRW_OK;
  if (!primes_spec.empty()) {
    bool ok = false;
    auto primes = parse_primes(primes_spec, ok);
    if (!ok) {
      std::cerr << "error: --primes expects a comma-separated list, e.g. 3,5\n";
      return kExitUsage;
    }
    hrw_presentation* raw = nullptr;
    status = oracle ? hrw_present_oracle(primes.data(), primes.size(), 0, &raw)
                    : hrw_present_main(primes.data(), primes.size(), &raw);
    p.reset(raw);
  } else {
    p = load_from_file(file, status);
  }
  if (!p) return fail(status);

  int64_t* torsion = nullptr;
  size_t torsion_len = 0, free_rank = 0;
  status = hrw_abelianization(p.get(), &torsion, &torsion_len, &free_rank);
  if (status != HRW_OK) return fail(status);
  std::cout << "torsion [";
  for (size_t i = 0; i < torsion_len; ++i) std::cout << (i ? ", " : "") << torsion[i];
  std::cout << "], free rank " << free_rank << "\n";
  hrw_int64_array_free(torsion);
  return kExitOk;
}

int run_congruence(const std::string& primes_spec, int64_t q, int power, uint64_t cap) {
  bool ok = false;
  auto primes = parse_primes(primes_spec, ok);
  if (!ok) {
    std::cerr << "error: --primes expects a comma-separated list, e.g. 3,5\n";
    return kExitUsage;
  }
  hrw_presentation* raw = nullptr;
  hrw_status status = hrw_present_main(primes.data(), primes.size(), &raw);
  if (status != HRW_OK) return fail(status);
  PresentationPtr p(raw);

  int all_scalar = 0;
  uint64_t order = 0;
  char* report = nullptr;
  status = hrw_congruence_image(p.get(), q, power, cap, &all_scalar, &order, &report);
  if (status != HRW_OK) return fail(status);
  StringPtr guard(report);
  std::cout << report << "\n";
  return all_scalar ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Presentations of projective S-unit groups of the Hurwitz quaternion order"};
  app.require_subcommand(1);

  std::string primes_spec, format = "json", out_path, fixture, file;
  bool oracle = false, do_simplify = false, stats = false;
  int64_t norm = 1, q = 7;
  int power = 1;
  uint64_t cap = 0;

  auto* present = app.add_subcommand("present", "Build a presentation and export it");
  present->add_option("--primes", primes_spec, "comma-separated odd primes, e.g. 3,5")->required();
  present->add_flag("--oracle", oracle, "use the all-classes builder instead of transversals");
  present->add_flag("--simplify", do_simplify, "apply Tietze simplification");
  present->add_flag("--stats", stats, "print relation-type counters to stderr");
  present->add_option("--format", format, "json, gap or magma")->check(CLI::IsMember({"json", "gap", "magma"}));
  present->add_option("--out", out_path, "write to a file instead of stdout");

  auto* enumerate = app.add_subcommand("enumerate", "List order elements of a reduced norm");
  enumerate->add_option("--norm", norm, "reduced norm")->required();

  auto* verify = app.add_subcommand("verify", "Check witnesses and relator products");
  verify->add_option("--fixture", fixture, "tabulated presentation name, e.g. s3_5");
  verify->add_option("--file", file, "presentation json file");

  auto* abelianize = app.add_subcommand("abelianize", "Invariant factors of the abelianization");
  abelianize->add_option("--primes", primes_spec, "comma-separated odd primes");
  abelianize->add_option("--file", file, "presentation json file");
  abelianize->add_flag("--oracle", oracle, "use the all-classes builder");

  auto* congruence = app.add_subcommand("congruence", "Reduction mod q^r and image closure");
  congruence->add_option("--primes", primes_spec, "comma-separated odd primes")->required();
  congruence->add_option("--q", q, "odd prime outside S")->required();
  congruence->add_option("--power", power, "precision r (default 1)");
  congruence->add_option("--cap", cap, "closure size cap (default 1000000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help/error text
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  if (present->parsed())
    return run_present(primes_spec, oracle, do_simplify, stats, format, out_path);
  if (enumerate->parsed()) return run_enumerate(norm);
  if (verify->parsed()) {
    if (fixture.empty() == file.empty()) {
      std::cerr << "error: verify needs exactly one of --fixture or --file\n";
      return kExitUsage;
    }
    return run_verify(fixture, file);
  }
  if (abelianize->parsed()) {
    if (primes_spec.empty() == file.empty()) {
      std::cerr << "error: abelianize needs exactly one of --primes or --file\n";
      return kExitUsage;
    }
    return run_abelianize(primes_spec, file, oracle);
  }
  if (congruence->parsed()) return run_congruence(primes_spec, q, power, cap);
  return kExitUsage;
}
