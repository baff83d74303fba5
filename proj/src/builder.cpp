#include "hurwitz/builder.hpp"

#include <map>
#include <set>
#include <sstream>

namespace hurwitz {

namespace {

struct MainTables {
  const Transversal* units;
  std::vector<Transversal> prime_tables;       // one per prime, ascending
  std::vector<int> first_gen;                  // generator slot of prime table i
  // generator slot of unit class k (k in 1..11) is k-1
};

// Product of two stored classes, as a class.
ProjectiveClass class_product(const ProjectiveClass& a, const ProjectiveClass& b) {
  return canonical_class(a.rep() * b.rep());
}

void append_inverse_letters(Word& w, std::initializer_list<Letter> letters) {
  // Appends the inverse of the given product, i.e. reversed with flipped signs.
  std::vector<Letter> tmp(letters);
  for (auto it = tmp.rbegin(); it != tmp.rend(); ++it) w.push_back({it->gen, -it->exp});
}

}  // namespace

Presentation build_main(const SPrimeSet& s) {
  if (s.empty()) raise(Errc::no_odd_primes, "S must contain at least one odd prime");

  MainTables t;
  t.units = &unit_transversal();
  const auto& units = *t.units;

  Presentation out;
  out.s_set = s;
  out.provenance.algorithm = "main";

  // Unit generators u1..u11 (identity class excluded).
  for (int k = 1; k < static_cast<int>(units.members.size()); ++k) {
    GeneratorId id{GenKind::unit, 0, k};
    out.generators.push_back({id, id.to_string(), units.members[static_cast<std::size_t>(k)]});
  }
  // Prime generators, primes ascending, transversal order.
  for (std::int64_t p : s.primes) {
    t.first_gen.push_back(static_cast<int>(out.generators.size()));
    t.prime_tables.push_back(prime_transversal(p));
    const Transversal& tp = t.prime_tables.back();
    for (int i = 0; i < static_cast<int>(tp.members.size()); ++i) {
      GeneratorId id{GenKind::prime, p, i};
      out.generators.push_back({id, id.to_string(), tp.members[static_cast<std::size_t>(i)]});
    }
  }

  auto unit_gen = [](int k) { return k - 1; };  // unit class index -> generator slot

  // Type 1: products inside the projective unit group.
  for (int i = 1; i <= 11; ++i) {
    for (int j = 1; j <= 11; ++j) {
      ProjectiveClass prod = class_product(units.members[i], units.members[j]);
      auto k = units.index_of(prod);
      if (!k) raise(Errc::match_not_found, "unit product left the unit classes");
      Word w{{unit_gen(i), 1}, {unit_gen(j), 1}};
      if (*k != 0) w.push_back({unit_gen(*k), -1});
      out.relators.push_back(std::move(w));
      ++out.provenance.type_counts[0];
    }
  }

  // Type 2: pairs in one A_p whose product is p times a unit.
  for (std::size_t pi = 0; pi < t.prime_tables.size(); ++pi) {
    const Transversal& tp = t.prime_tables[pi];
    const int base = t.first_gen[pi];
    for (int i = 0; i < static_cast<int>(tp.members.size()); ++i) {
      for (int j = 0; j < static_cast<int>(tp.members.size()); ++j) {
        ProjectiveClass prod = class_product(tp.members[i], tp.members[j]);
        if (prod.norm() != 1) continue;
        auto k = units.index_of(prod);
        if (!k) raise(Errc::match_not_found, "scalar product missed the unit classes");
        Word w{{base + i, 1}, {base + j, 1}};
        if (*k != 0) w.push_back({unit_gen(*k), -1});
        out.relators.push_back(std::move(w));
        ++out.provenance.type_counts[1];
      }
    }
  }

  // Type 3: sigma in A_p, tau in A_q (q < p); sigma*tau = beta*alpha*nu
  // with beta in A_p, alpha in A_q and nu a unit class. The unit sits on
  // the right, as in the vertex argument; with the unit on the left the
  // products stop covering the norm-pq classes once p+1 exceeds the
  // projective unit group order (first at p = 13).
  for (std::size_t qi = 0; qi < t.prime_tables.size(); ++qi) {
    for (std::size_t pi = qi + 1; pi < t.prime_tables.size(); ++pi) {
      const Transversal& tq = t.prime_tables[qi];
      const Transversal& tp = t.prime_tables[pi];
      std::map<ProjectiveClass, std::array<int, 3>> table;  // class -> (beta, alpha, nu)
      for (int b = 0; b < static_cast<int>(tp.members.size()); ++b)
        for (int a = 0; a < static_cast<int>(tq.members.size()); ++a)
          for (int d = 0; d < 12; ++d) {
            ProjectiveClass c = canonical_class(
                tp.members[static_cast<std::size_t>(b)].rep() * tq.members[static_cast<std::size_t>(a)].rep() *
                units.members[static_cast<std::size_t>(d)].rep());
            table.emplace(std::move(c), std::array<int, 3>{b, a, d});  // first match wins
          }
      const int qbase = t.first_gen[qi];
      const int pbase = t.first_gen[pi];
      for (int a = 0; a < static_cast<int>(tq.members.size()); ++a) {
        for (int b = 0; b < static_cast<int>(tp.members.size()); ++b) {
          ProjectiveClass target = class_product(tp.members[static_cast<std::size_t>(b)], tq.members[static_cast<std::size_t>(a)]);
          auto it = table.find(target);
          if (it == table.end())
            raise(Errc::match_not_found, "no beta*alpha*nu match for a p*q product");
          const auto [be, al, d] = it->second;
          Word w{{pbase + b, 1}, {qbase + a, 1}};
          if (d != 0)
            append_inverse_letters(w, {{pbase + be, 1}, {qbase + al, 1}, {unit_gen(d), 1}});
          else
            append_inverse_letters(w, {{pbase + be, 1}, {qbase + al, 1}});
          out.relators.push_back(std::move(w));
          ++out.provenance.type_counts[2];
        }
      }
    }
  }

  // Type 4: nu*sigma = tau*mu moves a unit across a prime generator.
  for (std::size_t pi = 0; pi < t.prime_tables.size(); ++pi) {
    const Transversal& tp = t.prime_tables[pi];
    const int base = t.first_gen[pi];
    std::map<ProjectiveClass, std::array<int, 2>> table;  // class -> (tau, mu)
    for (int u = 0; u < static_cast<int>(tp.members.size()); ++u)
      for (int d = 0; d < 12; ++d) {
        ProjectiveClass c = class_product(tp.members[static_cast<std::size_t>(u)], units.members[static_cast<std::size_t>(d)]);
        table.emplace(std::move(c), std::array<int, 2>{u, d});  // first match wins
      }
    for (int u = 0; u < static_cast<int>(tp.members.size()); ++u) {
      for (int d = 1; d < 12; ++d) {
        ProjectiveClass target = class_product(units.members[static_cast<std::size_t>(d)], tp.members[static_cast<std::size_t>(u)]);
        auto it = table.find(target);
        if (it == table.end())
          raise(Errc::match_not_found, "no tau*mu match for a unit*p product");
        const auto [tau, mu] = it->second;
        Word w{{unit_gen(d), 1}, {base + u, 1}};
        if (mu != 0)
          append_inverse_letters(w, {{base + tau, 1}, {unit_gen(mu), 1}});
        else
          append_inverse_letters(w, {{base + tau, 1}});
        out.relators.push_back(std::move(w));
        ++out.provenance.type_counts[3];
      }
    }
  }

  return out;
}

Presentation build_oracle(const SPrimeSet& s, std::size_t generator_cap) {
  if (s.empty()) raise(Errc::no_odd_primes, "S must contain at least one odd prime");

  // Divisors of m_S, ascending (m_S is squarefree).
  std::vector<std::int64_t> divisors{1};
  for (std::int64_t p : s.primes) {
    std::size_t n = divisors.size();
    for (std::size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * p);
  }
  std::sort(divisors.begin(), divisors.end());

  Presentation out;
  out.s_set = s;
  out.provenance.algorithm = "oracle";

  std::map<ProjectiveClass, int> slot;
  for (std::int64_t d : divisors) {
    if (d == 1) {
      const auto& units = unit_transversal();
      for (int k = 1; k < static_cast<int>(units.members.size()); ++k) {
        GeneratorId id{GenKind::unit, 0, k};
        slot.emplace(units.members[static_cast<std::size_t>(k)], static_cast<int>(out.generators.size()));
        out.generators.push_back({id, id.to_string(), units.members[static_cast<std::size_t>(k)]});
      }
      continue;
    }
    std::set<ProjectiveClass> classes;
    for (const auto& e : elements_of_norm(d)) classes.insert(canonical_class(e));
    int i = 0;
    for (const auto& c : classes) {
      GeneratorId id{GenKind::named, 0, static_cast<int>(out.generators.size())};
      std::string label = "x" + std::to_string(d) + "_" + std::to_string(i++);
      slot.emplace(c, static_cast<int>(out.generators.size()));
      out.generators.push_back({id, std::move(label), c});
    }
    if (out.generators.size() > generator_cap)
      raise(Errc::size_limit_exceeded,
            "oracle generator count exceeds cap of " + std::to_string(generator_cap));
  }
  if (out.generators.size() > generator_cap)
    raise(Errc::size_limit_exceeded,
          "oracle generator count exceeds cap of " + std::to_string(generator_cap));

  const int n = static_cast<int>(out.generators.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ProjectiveClass prod = class_product(out.generators[static_cast<std::size_t>(i)].witness,
                                           out.generators[static_cast<std::size_t>(j)].witness);
      if (prod.is_identity()) {
        out.relators.push_back(Word{{i, 1}, {j, 1}});
      } else if (auto it = slot.find(prod); it != slot.end()) {
        out.relators.push_back(Word{{i, 1}, {j, 1}, {it->second, -1}});
      }
    }
  }
  return out;
}

VerifyReport verify_presentation(const Presentation& p) {
  VerifyReport report;
  for (int i = 0; i < static_cast<int>(p.generators.size()); ++i) {
    if (!class_in_projective_sunits(p.generators[static_cast<std::size_t>(i)].witness, p.s_set))
      report.non_smooth_witnesses.push_back(i);
  }
  report.relator_checks.reserve(p.relators.size());
  for (int i = 0; i < static_cast<int>(p.relators.size()); ++i) {
    HurwitzElement v = evaluate_word(p, p.relators[static_cast<std::size_t>(i)]);
    RelatorCheck check;
    check.is_scalar = !v.is_zero() && v.x == 0 && v.y == 0 && v.z == 0;
    if (check.is_scalar) check.scalar = v.w / 2;
    else report.failed_relators.push_back(i);
    report.relator_checks.push_back(std::move(check));
  }
  report.pass = report.failed_relators.empty() && report.non_smooth_witnesses.empty();
  return report;
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  const std::size_t total = relator_checks.size();
  out << (total - failed_relators.size()) << "/" << total << " relators evaluate to a rational scalar";
  if (!failed_relators.empty()) {
    out << "; non-scalar:";
    for (int i : failed_relators) out << " r" << (i + 1);
  }
  if (!non_smooth_witnesses.empty()) {
    out << "; witnesses outside the S-units:";
    for (int i : non_smooth_witnesses) out << " #" << (i + 1);
  }
  out << (pass ? "; PASS" : "; FAIL");
  return out.str();
}

}  // namespace hurwitz
