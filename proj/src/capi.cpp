#include "hurwitz.h"

#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "hurwitz/abelian.hpp"
#include "hurwitz/builder.hpp"
#include "hurwitz/fixtures.hpp"
#include "hurwitz/serialize.hpp"
#include "hurwitz/splitting.hpp"
#include "hurwitz/tietze.hpp"

struct hrw_presentation {
  hurwitz::Presentation value;
};

namespace {

thread_local std::string g_last_error = "no error";

hrw_status code_of(hurwitz::Errc c) {
  using hurwitz::Errc;
  switch (c) {
    case Errc::no_odd_primes:
      return HRW_ERROR_NO_ODD_PRIMES;
    case Errc::size_limit_exceeded:
      return HRW_ERROR_SIZE_LIMIT;
    case Errc::prime_in_s:
      return HRW_ERROR_PRIME_IN_S;
    case Errc::cap_exceeded:
      return HRW_ERROR_CAP_EXCEEDED;
    case Errc::not_found:
      return HRW_ERROR_NOT_FOUND;
    case Errc::parse_error:
      return HRW_ERROR_PARSE;
    case Errc::overflow:
      return HRW_ERROR_OVERFLOW;
    case Errc::invalid_argument:
    case Errc::invalid_prime:
    case Errc::zero_element:
    case Errc::norm_mismatch:
    case Errc::singular_generator:
      return HRW_ERROR_USAGE;
    case Errc::match_not_found:
      return HRW_ERROR_INTERNAL;
  }
  return HRW_ERROR_INTERNAL;
}

template <typename Fn>
hrw_status guarded(Fn&& fn) {
  try {
    fn();
    return HRW_OK;
  } catch (const hurwitz::Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HRW_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HRW_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hurwitz::SPrimeSet prime_set(const int64_t* primes, size_t count) {
  if (count > 0 && primes == nullptr)
    hurwitz::raise(hurwitz::Errc::invalid_argument, "primes pointer is null");
  std::vector<int64_t> v;
  if (count > 0) v.assign(primes, primes + count);
  return hurwitz::SPrimeSet::make(std::move(v));
}

const hurwitz::Presentation& deref(const hrw_presentation* p) {
  if (!p) hurwitz::raise(hurwitz::Errc::invalid_argument, "presentation handle is null");
  return p->value;
}

}  // namespace

extern "C" {

const char* hrw_last_error(void) { return g_last_error.c_str(); }

void hrw_presentation_free(hrw_presentation* p) { delete p; }
void hrw_string_free(char* s) { delete[] s; }
void hrw_int64_array_free(int64_t* a) { delete[] a; }

hrw_status hrw_present_main(const int64_t* primes, size_t count, hrw_presentation** out) {
  return guarded([&] {
    if (!out) hurwitz::raise(hurwitz::Errc::invalid_argument, "out pointer is null");
    *out = new hrw_presentation{hurwitz::build_main(prime_set(primes, count))};
  });
}

hrw_status hrw_present_oracle(const int64_t* primes, size_t count, size_t generator_cap,
                              hrw_presentation** out) {
  return guarded([&] {
    if (!out) hurwitz::raise(hurwitz::Errc::invalid_argument, "out pointer is null");
    auto s = prime_set(primes, count);
    *out = new hrw_presentation{generator_cap == 0 ? hurwitz::build_oracle(s)
                                                   : hurwitz::build_oracle(s, generator_cap)};
  });
}

hrw_status hrw_simplify(const hrw_presentation* p, int max_passes, int max_relator_growth,
                        int max_eliminated_word_length, hrw_presentation** out) {
  return guarded([&] {
    if (!out) hurwitz::raise(hurwitz::Errc::invalid_argument, "out pointer is null");
    hurwitz::SimplifyBudget budget;
    if (max_passes > 0) budget.max_passes = max_passes;
    if (max_relator_growth > 0) budget.max_relator_growth = max_relator_growth;
    if (max_eliminated_word_length > 0) budget.max_eliminated_word_length = max_eliminated_word_length;
    *out = new hrw_presentation{hurwitz::simplify(deref(p), budget)};
  });
}

hrw_status hrw_fixture(const char* name, hrw_presentation** out) {
  return guarded([&] {
    if (!out || !name) hurwitz::raise(hurwitz::Errc::invalid_argument, "null argument");
    *out = new hrw_presentation{hurwitz::fixture_presentation(name)};
  });
}

size_t hrw_fixture_count(void) { return hurwitz::fixtures().size(); }

const char* hrw_fixture_name(size_t index) {
  const auto& all = hurwitz::fixtures();
  if (index >= all.size()) return nullptr;
  return all[index].name.c_str();
}

hrw_status hrw_parse_json(const char* text, hrw_presentation** out) {
  return guarded([&] {
    if (!out || !text) hurwitz::raise(hurwitz::Errc::invalid_argument, "null argument");
    *out = new hrw_presentation{hurwitz::parse_presentation_json(text)};
  });
}

size_t hrw_generator_count(const hrw_presentation* p) { return p ? p->value.generators.size() : 0; }
size_t hrw_relator_count(const hrw_presentation* p) { return p ? p->value.relators.size() : 0; }

hrw_status hrw_relation_type_counts(const hrw_presentation* p, int64_t out_counts[4]) {
  return guarded([&] {
    if (!out_counts) hurwitz::raise(hurwitz::Errc::invalid_argument, "out pointer is null");
    const auto& counts = deref(p).provenance.type_counts;
    for (int i = 0; i < 4; ++i) out_counts[i] = counts[static_cast<std::size_t>(i)];
  });
}

hrw_status hrw_export(const hrw_presentation* p, const char* format, char** out_text) {
  return guarded([&] {
    if (!out_text || !format) hurwitz::raise(hurwitz::Errc::invalid_argument, "null argument");
    auto f = hurwitz::parse_format(format);
    if (!f) hurwitz::raise(hurwitz::Errc::invalid_argument, std::string("unknown format: ") + format);
    *out_text = dup_string(hurwitz::export_presentation(deref(p), *f));
  });
}

hrw_status hrw_verify(const hrw_presentation* p, int* out_pass, char** out_report) {
  return guarded([&] {
    if (!out_pass) hurwitz::raise(hurwitz::Errc::invalid_argument, "out pointer is null");
    hurwitz::VerifyReport report = hurwitz::verify_presentation(deref(p));
    *out_pass = report.pass ? 1 : 0;
    if (out_report) *out_report = dup_string(report.summary());
  });
}

hrw_status hrw_abelianization(const hrw_presentation* p, int64_t** out_torsion,
                              size_t* out_torsion_len, size_t* out_free_rank) {
  return guarded([&] {
    if (!out_torsion || !out_torsion_len || !out_free_rank)
      hurwitz::raise(hurwitz::Errc::invalid_argument, "out pointer is null");
    hurwitz::AbelianInvariants inv = hurwitz::abelianization(deref(p));
    auto* torsion = new int64_t[inv.torsion.size()];
    for (std::size_t i = 0; i < inv.torsion.size(); ++i) {
      static const hurwitz::Int hi = std::numeric_limits<int64_t>::max();
      if (inv.torsion[i] > hi) {
        delete[] torsion;
        hurwitz::raise(hurwitz::Errc::overflow, "invariant factor does not fit 64 bits");
      }
      torsion[i] = inv.torsion[i].convert_to<int64_t>();
    }
    *out_torsion = torsion;
    *out_torsion_len = inv.torsion.size();
    *out_free_rank = static_cast<size_t>(inv.free_rank);
  });
}

hrw_status hrw_congruence_image(const hrw_presentation* p, int64_t q, int power, uint64_t cap,
                                int* out_all_scalar, uint64_t* out_image_order,
                                char** out_report) {
  return guarded([&] {
    if (!out_all_scalar || !out_image_order)
      hurwitz::raise(hurwitz::Errc::invalid_argument, "out pointer is null");
    hurwitz::CongruenceReport report =
        hurwitz::congruence_image(deref(p), q, power, cap == 0 ? 1000000 : cap);
    *out_all_scalar = report.all_scalar ? 1 : 0;
    *out_image_order = report.image_order;
    if (out_report) *out_report = dup_string(report.summary());
  });
}

hrw_status hrw_elements_of_norm(int64_t n, int64_t** out_coords, size_t* out_count) {
  return guarded([&] {
    if (!out_coords || !out_count) hurwitz::raise(hurwitz::Errc::invalid_argument, "null argument");
    auto elems = hurwitz::elements_of_norm(n);
    auto* coords = new int64_t[elems.size() * 4];
    for (std::size_t i = 0; i < elems.size(); ++i) {
      coords[4 * i + 0] = elems[i].w.convert_to<int64_t>();
      coords[4 * i + 1] = elems[i].x.convert_to<int64_t>();
      coords[4 * i + 2] = elems[i].y.convert_to<int64_t>();
      coords[4 * i + 3] = elems[i].z.convert_to<int64_t>();
    }
    *out_coords = coords;
    *out_count = elems.size();
  });
}

}  // extern "C"
