#include "mahonian/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

#include "mahonian/carlitz.hpp"
#include "mahonian/digraphs.hpp"
#include "mahonian/jacobi_rogers.hpp"
#include "mahonian/limits.hpp"
#include "mahonian/permstats.hpp"

namespace mahonian {

namespace {

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

std::string join(const std::vector<int>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) {
      out += sep;
    }
    out += std::to_string(v[i]);
  }
  return out;
}

std::string alphabet_label(const std::vector<int>& parts) { return "alphabet=" + join(parts); }

/// Records equalities until the first failure.
class Run {
 public:
  Run(VerifyReport& report, const VerifyOptions& options) : report_(report), options_(options) {}

  bool ok() const { return report_.pass; }
  unsigned jobs() const { return options_.jobs; }

  /// Resolves a default sub-bound and records it under `label`.
  int bound(int fallback, const std::string& label, bool enumerates = true) {
    int b = fallback;
    if (options_.n_max) {
      b = *options_.n_max;
      if (enumerates) {
        require_within_ceiling(b, "verify");
      }
    } else {
      if (options_.cap) {
        b = std::min(b, *options_.cap);
      }
      if (enumerates) {
        b = std::min(b, enumeration_ceiling());
      }
    }
    if (b < 0) {
      throw std::invalid_argument("bound must be nonnegative");
    }
    if (!report_.bounds.empty()) {
      report_.bounds += ' ';
    }
    report_.bounds += label + "=" + std::to_string(b);
    return b;
  }

  bool check(const Poly& lhs, const Poly& rhs, const std::string& object) {
    ++report_.cases;
    if (!(lhs == rhs)) {
      fail(object, lhs.to_string(), rhs.to_string());
    }
    return ok();
  }

  bool check(long long lhs, long long rhs, const std::string& object) {
    ++report_.cases;
    if (lhs != rhs) {
      fail(object, std::to_string(lhs), std::to_string(rhs));
    }
    return ok();
  }

  bool check(const CheckReport& c, const std::string& object) {
    ++report_.cases;
    if (!c.pass) {
      fail(object + ": " + c.detail, "fail", "pass");
    }
    return ok();
  }

  void fail(const std::string& object, std::string lhs, std::string rhs) {
    if (report_.pass) {
      report_.pass = false;
      report_.counterexample = Counterexample{object, std::move(lhs), std::move(rhs)};
    }
  }

 private:
  VerifyReport& report_;
  const VerifyOptions& options_;
};

/// [n]_q! / [k]_q!
Poly q_falling(int n, int k) {
  Poly out(1);
  for (int j = k + 1; j <= n; ++j) {
    out *= q_int(j);
  }
  return out;
}

Poly substitute_names(const Poly& p, const std::vector<std::pair<const char*, long>>& values) {
  std::vector<std::pair<VarId, Poly>> subs;
  for (const auto& [name, value] : values) {
    subs.emplace_back(var(name), Poly(value));
  }
  return p.substitute(subs);
}

// ---------------------------------------------------------------- permstats

void thm21(Run& run) {
  const int n_max = run.bound(6, "n_max");
  for (int n = 0; n <= n_max && run.ok(); ++n) {
    for (int k = 0; k <= n && run.ok(); ++k) {
      const Poly maj = distribution(n, k, {QStatistic::maj, true}, run.jobs());
      const Poly inv = distribution(n, k, {QStatistic::inv, true}, run.jobs());
      const Poly product = mahonian_stirling_product(n, k);
      run.check(maj, product, nk(n, k) + " maj side") &&
          run.check(inv, product, nk(n, k) + " inv side") &&
          run.check(substitute_names(maj, {{"b", 1}}), q_binomial(n, k) * q_falling(n, k),
                    nk(n, k) + " b=1");
    }
  }
}

void thm22(Run& run) {
  const int n_max = run.bound(5, "n_max");
  const VarId z = var("z");
  for (int n = 0; n <= n_max && run.ok(); ++n) {
    for (int k = 0; k <= n && run.ok(); ++k) {
      const auto [lhs, rhs] = hrw_sides(n, k, run.jobs());
      const Poly plain = q_binomial(n, k) * q_falling(n, k);
      run.check(lhs, rhs, nk(n, k)) &&
          run.check(lhs.substitute(z, Poly()), plain, nk(n, k) + " z=0") &&
          run.check(distribution(n, k, {QStatistic::inv, false}, run.jobs()), plain,
                    nk(n, k) + " inv distribution");
    }
  }
}

void for_each_word(Run& run, int n_max, const std::function<void(const LaguerreWord&)>& fn) {
  for (int n = 0; n <= n_max && run.ok(); ++n) {
    for (int k = 0; k <= n && run.ok(); ++k) {
      WordStream(WordSpace{n, k}).visit_all([&](const LaguerreWord& w) {
        if (run.ok()) {
          fn(w);
        }
      });
    }
  }
}

void prop31(Run& run) {
  const int n_max = run.bound(6, "n_max");
  for_each_word(run, n_max, [&](const LaguerreWord& w) {
    const StatRecord s = full_stats(w);
    const ZeroOneMatrix m = word_to_matrix(w);
    const std::string label = "word=" + w.to_string();
    run.check(matrix_survivor_inv(m), s.inv, label + " inv") &&
        run.check(matrix_survivor_maj(m), s.maj, label + " maj") &&
        run.check(matrix_to_word(m) == w ? 1 : 0, 1, label + " round trip");
  });
}

void eq34(Run& run) {
  const int n_max = run.bound(6, "n_max");
  for_each_word(run, n_max, [&](const LaguerreWord& w) {
    const StatRecord s = full_stats(w);
    run.check(s.inv, s.tilde_inv_filled() + s.inv_holes, "word=" + w.to_string());
  });
}

void lemma32(Run& run) {
  const int n_max = run.bound(6, "n_max");
  for (int n = 0; n <= n_max && run.ok(); ++n) {
    for (int k = 0; k <= n && run.ok(); ++k) {
      const Poly per_set = bq_product(k + 1, n);
      Poly total;
      for (const auto& holes : hole_sets(n, k)) {
        WordSpace space{n, k, holes, std::nullopt};
        const Poly part = distribution(space, {QStatistic::tilde_inv_filled, true}, run.jobs());
        if (!run.check(part, per_set, nk(n, k) + " holes={" + join(holes) + "}")) {
          return;
        }
        // every word of this hole set has inv_holes = inv(complement of I, I)
        std::vector<int> rest;
        for (int i = 1; i <= n; ++i) {
          if (std::find(holes.begin(), holes.end(), i) == holes.end()) {
            rest.push_back(i);
          }
        }
        const int shift = between_inversions(rest, holes);
        total += Poly::variable("q", static_cast<std::uint32_t>(shift)) * part;
      }
      run.check(between_set_poly(n, k), q_binomial(n, k), nk(n, k) + " between-set sum") &&
          run.check(total, distribution(n, k, {QStatistic::inv, true}, run.jobs()),
                    nk(n, k) + " hole-set decomposition") &&
          run.check(total, mahonian_stirling_product(n, k), nk(n, k) + " product");
    }
  }
}

void table1(Run& run) {
  const char* words[] = {"1 * 2", "1 * 3", "2 * 3", "2 * 1", "3 * 1", "3 * 2"};
  const char* weights[] = {"b^2", "bq", "q^2", "bq", "bq^2", "q^3"};
  const VarId b = var("b");
  const VarId q = var("q");
  Poly sum;
  for (int i = 0; i < 6; ++i) {
    const StatRecord s = full_stats(LaguerreWord::parse(words[i]));
    const Poly weight(Monomial{{b, static_cast<std::uint32_t>(s.rlmin())},
                               {q, static_cast<std::uint32_t>(s.tilde_inv_filled())}});
    if (weight.to_string() != weights[i]) {
      run.fail(std::string("word=") + words[i], weight.to_string(), weights[i]);
      return;
    }
    run.check(1, 1, std::string("word=") + words[i]);
    sum += weight;
  }
  const Poly bb = Poly::variable(b);
  const Poly qq = Poly::variable(q);
  const Poly factored = (bb + qq) * (bb + qq + qq * qq);
  run.check(sum, factored, "sum over the six words") &&
      run.check(distribution(WordSpace{3, 1, std::vector<int>{2}, std::nullopt},
                             {QStatistic::tilde_inv_filled, true}, run.jobs()),
                factored, "hole set {2} distribution");
}

// ----------------------------------------------------------------- carlitz

void thm32(Run& run) {
  const int n_max = run.bound(7, "n_max");
  for (int n = 0; n <= n_max && run.ok(); ++n) {
    for (const auto& parts : compositions(n)) {
      std::set<std::vector<int>> image;
      for (const auto& w : enumerate_multiset(parts)) {
        const MultisetWord p = carlitz_psi(w);
        const auto code = b_code(w);
        long long code_sum = 0;
        for (int b : code) {
          code_sum += b;
        }
        const std::string label = alphabet_label(parts) + " word=" + w.to_string();
        const int inv = inversions(w.letters());
        if (!(run.check(code_sum, inv, label + " sum of b-code") &&
              run.check(major_index(p.letters()), inv, label + " maj(psi) vs inv") &&
              run.check(rlmin_multiset(p) == rlmin_multiset(w) ? 1 : 0, 1,
                        label + " Rlmin preserved") &&
              run.check(carlitz_psi_inverse(p) == w ? 1 : 0, 1, label + " inverse round trip"))) {
          return;
        }
        image.insert(p.letters());
      }
      const Integer expected = multiset_count(parts);
      if (!run.check(static_cast<long long>(image.size()), expected.get_si(),
                     alphabet_label(parts) + " image size")) {
        return;
      }
    }
  }
}

void wilson(Run& run) {
  const int n_max = run.bound(6, "n_max");
  for (int n = 0; n <= n_max && run.ok(); ++n) {
    for (const auto& parts : compositions(n)) {
      const auto [lhs, rhs] = wilson_sides(parts);
      if (!run.check(lhs, rhs, alphabet_label(parts))) {
        return;
      }
    }
  }
}

void macmahon(Run& run) {
  const int n_max = run.bound(7, "n_max");
  for (int n = 0; n <= n_max && run.ok(); ++n) {
    for (const auto& parts : compositions(n)) {
      const auto [inv, maj] = macmahon_sides(parts);
      const std::string label = alphabet_label(parts);
      if (!(run.check(inv, maj, label) &&
            run.check(inv, q_multinomial(parts), label + " product formula"))) {
        return;
      }
    }
  }
}

// ---------------------------------------------------------------- digraphs

void thm23(Run& run) {
  const int n_max = run.bound(5, "n_max");
  const MuTable mu = mu_table(preset("digraph"), n_max);
  for (int n = 0; n <= n_max && run.ok(); ++n) {
    for (int k = 0; k <= n && run.ok(); ++k) {
      run.check(ld_enumerator(n, k, true, run.jobs()), mu.at(n, k), nk(n, k));
    }
  }
}

void alternating(Run& run) {
  const int n_max = run.bound(6, "n_max");
  const MuTable mu = mu_table(preset("alternating"), n_max);
  for (int n = 0; n <= n_max && run.ok(); ++n) {
    for (int k = 0; k <= n && run.ok(); ++k) {
      const Poly special = substitute_names(ld_enumerator(n, k, true, run.jobs()),
                                            {{"u1", 1}, {"u2", 1}, {"u3", 0}, {"u4", 0}, {"a", 0}});
      run.check(special, mu.at(n, k), nk(n, k));
    }
  }
}

void lemma42(Run& run) {
  const int n_max = run.bound(7, "n_max");
  const MuTable mu = mu_table(preset("cyc"), n_max);
  for (int n = 0; n <= n_max && run.ok(); ++n) {
    run.check(perm_cycle_poly(n, run.jobs()), mu.at(n, 0), "n=" + std::to_string(n));
  }
}

void riccati(Run& run) {
  const int n_max = run.bound(7, "n_max");
  const int failure = riccati_first_failure(n_max);
  run.check(failure, -1, "first failing n");
}

void aigner(Run& run) {
  const int n_max = run.bound(6, "n_max");
  run.check(egf_consistency(n_max), "order " + std::to_string(n_max));
}

void zhu(Run& run) {
  const int n_max = run.bound(5, "n_max");
  for (int n = 0; n <= n_max && run.ok(); ++n) {
    const auto [lhs, rhs] = zhu_sides(n);
    run.check(lhs, rhs, "n=" + std::to_string(n));
  }
}

// ----------------------------------------------------------- jacobi_rogers

void moments_euler(Run& run) {
  const int order = run.bound(8, "N", false);
  const MuTable mu = mu_table(preset("euler"), order);
  const Series cf = cf_taylor(preset("euler"), order);
  for (int n = 0; n <= order && run.ok(); ++n) {
    run.check(mu.at(n, 0), Poly(factorial(n)), "mu_n n=" + std::to_string(n)) &&
        run.check(cf[static_cast<std::size_t>(n)], Poly(factorial(n)),
                  "cf coefficient n=" + std::to_string(n));
    for (int k = 0; k <= n && run.ok(); ++k) {
      const Integer closed = binomial(n, k) * factorial(n) / factorial(k);
      run.check(mu.at(n, k), Poly(closed), nk(n, k));
    }
  }
}

void moments_bq(Run& run) {
  const int order = run.bound(7, "N", false);
  const int stat_max = run.bound(6, "stat_n_max");
  const MuTable mu = mu_table(preset("beta_q"), order);
  for (int n = 0; n <= order && run.ok(); ++n) {
    run.check(mu.at(n, 0), bq_factorial(n), "mu_n n=" + std::to_string(n)) &&
        run.check(substitute_names(mu.at(n, 0), {{"b", 1}}), q_factorial(n),
                  "b=1 n=" + std::to_string(n));
  }
  for (int n = 0; n <= std::min(stat_max, order) && run.ok(); ++n) {
    for (int k = 0; k <= n && run.ok(); ++k) {
      run.check(mu.at(n, k), distribution(n, k, {QStatistic::maj, true}, run.jobs()),
                nk(n, k) + " statistic");
    }
  }
}

struct NamedParams {
  JRParams params;
  int order;
};

std::vector<NamedParams> all_params(Run& run, int preset_default, int generic_default) {
  const int preset_order = run.bound(preset_default, "N", false);
  const int generic_order = run.bound(generic_default, "generic", false);
  std::vector<NamedParams> out;
  for (const auto& name : preset_names()) {
    out.push_back({preset(name), preset_order});
  }
  out.push_back({generic_params(), generic_order});
  return out;
}

void cf_vs_recurrence(Run& run) {
  for (const auto& [params, order] : all_params(run, 8, 6)) {
    const MuTable mu = mu_table(params, order);
    const Series cf = cf_taylor(params, order);
    const Series deeper = cf_taylor(params, order, (order + 1) / 2 + 2);
    if (!run.check(cf == deeper ? 1 : 0, 1, params.name + " depth guard")) {
      return;
    }
    for (int n = 0; n <= order; ++n) {
      if (!run.check(cf[static_cast<std::size_t>(n)], mu.at(n, 0),
                     params.name + " n=" + std::to_string(n))) {
        return;
      }
    }
  }
}

void motzkin_oracle(Run& run) {
  for (const auto& [params, order] : all_params(run, 8, 6)) {
    const MuTable mu = mu_table(params, order);
    for (int n = 0; n <= order; ++n) {
      for (int k = 0; k <= n; ++k) {
        if (!run.check(motzkin_mu(params, n, k), mu.at(n, k), params.name + " " + nk(n, k))) {
          return;
        }
      }
    }
  }
}

void duality(Run& run) {
  for (const auto& [params, order] : all_params(run, 7, 5)) {
    if (!run.check(duality_check(params, order), params.name)) {
      return;
    }
  }
}

void little_q_laguerre(Run& run) {
  const int order = run.bound(7, "N", false);
  run.check(little_q_laguerre_check(order), "beta_q N=" + std::to_string(order));
}

struct Entry {
  const char* id;
  int default_bound;
  void (*fn)(Run&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"thm2.1", 6, thm21},
      {"thm2.2", 5, thm22},
      {"prop3.1", 6, prop31},
      {"eq3.4", 6, eq34},
      {"thm3.2", 7, thm32},
      {"wilson", 6, wilson},
      {"macmahon", 7, macmahon},
      {"lemma3.2", 6, lemma32},
      {"table1", 3, table1},
      {"thm2.3", 5, thm23},
      {"alternating", 6, alternating},
      {"lemma4.2", 7, lemma42},
      {"riccati", 7, riccati},
      {"aigner", 6, aigner},
      {"zhu", 5, zhu},
      {"moments-euler", 8, moments_euler},
      {"moments-bq", 7, moments_bq},
      {"cf-vs-recurrence", 8, cf_vs_recurrence},
      {"motzkin-oracle", 8, motzkin_oracle},
      {"duality", 7, duality},
      {"little-q-laguerre", 7, little_q_laguerre},
  };
  return entries;
}

const Entry& find_entry(std::string_view id) {
  for (const auto& e : registry()) {
    if (id == e.id) {
      return e;
    }
  }
  throw std::invalid_argument("unknown verify id '" + std::string(id) + "'");
}

}  // namespace

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) {
      out.emplace_back(e.id);
    }
    return out;
  }();
  return ids;
}

bool is_verify_id(std::string_view id) {
  return std::any_of(registry().begin(), registry().end(),
                     [&](const Entry& e) { return id == e.id; });
}

int default_bound(std::string_view id) { return find_entry(id).default_bound; }

VerifyReport run_verify(std::string_view id, const VerifyOptions& options) {
  const Entry& entry = find_entry(id);
  VerifyReport report;
  report.id = entry.id;
  Run run(report, options);
  const auto start = std::chrono::steady_clock::now();
  entry.fn(run);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (report.bounds.empty()) {
    report.bounds = "fixed";
  }
  return report;
}

}  // namespace mahonian
