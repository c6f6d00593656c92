#include "kronstab/stability_checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "kronstab/characters.hpp"
#include "kronstab/error.hpp"
#include "kronstab/kronecker.hpp"
#include "kronstab/littlewood_richardson.hpp"
#include "kronstab/op_counter.hpp"

namespace kronstab {

namespace {

struct Outcome {
  std::uint64_t checked = 0;
  std::vector<Counterexample> failures;

  // Records one assertion; returns `holds` so callers can chain.
  bool expect(bool holds, std::string instance, std::string detail) {
    ++checked;
    if (!holds) failures.push_back({std::move(instance), std::move(detail)});
    return holds;
  }
};

struct Instance {
  std::string label;
  std::function<void(Outcome&)> run;
};

// Runs instances on `jobs` threads. Outcomes are merged in instance order
// and failures sorted, so the report does not depend on the schedule.
VerificationReport run_sweep(std::string statement, std::map<std::string, int> box,
                             std::vector<Instance> instances, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        instances[i].run(outcomes[i]);
      } catch (const std::exception& e) {
        outcomes[i].checked += 1;
        outcomes[i].failures.push_back({instances[i].label, std::string("exception: ") + e.what()});
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(instances.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  VerificationReport report;
  report.statement = std::move(statement);
  report.search_box = std::move(box);
  for (auto& o : outcomes) {
    report.checked += o.checked;
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  }
  std::sort(report.failures.begin(), report.failures.end());
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

const Evaluator& evaluator_of(const SweepOptions& opts) {
  static const Evaluator plain;
  return opts.evaluator ? *opts.evaluator : plain;
}

std::string str(const Partition& p) { return p.to_string(); }
std::string str(Integer v) { return std::to_string(v); }

}  // namespace

std::string VerificationReport::to_json_line() const {
  nlohmann::ordered_json j;
  j["statement"] = statement;
  j["search_box"] = nlohmann::ordered_json(search_box);
  j["checked"] = checked;
  auto list = nlohmann::ordered_json::array();
  for (const auto& f : failures) list.push_back({{"instance", f.instance}, {"detail", f.detail}});
  j["failures"] = std::move(list);
  j["status"] = passed() ? "pass" : "fail";
  j["wall_time"] = wall_time;
  return j.dump();
}

Integer tau_multiplicity(const TauMultiplicityQuery& q, const Evaluator& eval) {
  ops::hit(ops::Op::tau_multiplicity);
  if (q.m < 0 || q.m > q.n) throw ArgumentError("tau multiplicity needs 0 <= m <= n");
  if (q.i < 0) throw ArgumentError("tau multiplicity needs i >= 0");
  const Partition padded = pad(q.mu, q.n - q.i);
  return eval.rkron(q.lam, Partition::row(q.n - q.m), padded);
}

Integer induced_multiplicity(const Partition& mu, int m, int n, const Partition& lam, int i, const Evaluator& eval) {
  ops::hit(ops::Op::induced_multiplicity);
  if (mu.size() > m || m > n) throw ArgumentError("induced multiplicity needs |mu| <= m <= n");
  if (i < 0) throw ArgumentError("induced multiplicity needs i >= 0");
  const Partition padded = pad(lam, n - i);
  return eval.rkron(mu, Partition::row(n - m), padded);
}

VerificationReport check_lrflip(int max_core, int max_xi, const SweepOptions& opts) {
  const Evaluator& eval = evaluator_of(opts);
  std::vector<Instance> instances;
  for (const auto& lam : enumerate_partitions_up_to(max_core)) {
    for (const auto& xi : enumerate_partitions_up_to(max_xi)) {
      const std::string label = "lam=" + str(lam) + " xi=" + str(xi);
      instances.push_back({label, [&eval, lam, xi, label](Outcome& out) {
        const int bound = lam.size() + xi.first();
        const Integer core_side =
            xi.size() >= lam.size() ? eval.lr(lam, Partition::row(xi.size() - lam.size()), xi) : 0;
        for (int n = xi.size(); n <= bound + 3; ++n) {
          if (!is_paddable(lam, n)) continue;
          const Partition padded = pad(lam, n);
          const int strip = n - xi.size();
          const Integer padded_side = pieri_coeff(xi, strip, padded);
          const std::string at = label + " n=" + std::to_string(n);
          const std::string values =
              "c^{lam[n]}_{xi,(n-|xi|)}=" + str(padded_side) + " c^xi_{lam,(|xi|-|lam|)}=" + str(core_side);

          const auto removals = horizontal_strip_removals(padded, strip);
          const bool listed = std::find(removals.begin(), removals.end(), xi) != removals.end();
          out.expect(listed == (padded_side == 1), "(pieri) " + at, "strip removal listing disagrees: " + values);

          if (padded_side == 1) out.expect(core_side == 1, "(a) " + at, values);
          if (n >= bound) {
            if (core_side == 1) out.expect(padded_side == 1, "(b) " + at, values);
            out.expect(core_side == padded_side, "(c) " + at, values);
          }
        }
      }});
    }
  }
  return run_sweep("lrflip", {{"max_core", max_core}, {"max_xi", max_xi}}, std::move(instances), opts.jobs);
}

VerificationReport check_kroneckerstab(int max_lam, int max_mu, int max_k, int margin, const SweepOptions& opts) {
  const Evaluator& eval = evaluator_of(opts);
  std::vector<Instance> instances;
  for (const auto& lam : enumerate_partitions_up_to(max_lam)) {
    for (const auto& mu : enumerate_partitions_up_to(max_mu)) {
      for (int k = 0; k <= max_k; ++k) {
        const std::string label = "lam=" + str(lam) + " mu=" + str(mu) + " k=" + std::to_string(k);
        instances.push_back({label, [&eval, lam, mu, k, margin, label](Outcome& out) {
          const int start = std::max({lam.size() + mu.size(), lam.size() + lam.first(), k});
          const Integer first = eval.rkron(pad(lam, start), mu, Partition::row(start - k));
          for (int n = start + 1; n <= start + margin; ++n) {
            const Integer value = eval.rkron(pad(lam, n), mu, Partition::row(n - k));
            out.expect(value == first, label + " n=" + std::to_string(n),
                       "value " + str(value) + " differs from " + str(first) + " at n=" + std::to_string(start));
          }
        }});
      }
    }
  }
  return run_sweep("kron-stab", {{"max_lam", max_lam}, {"max_mu", max_mu}, {"max_k", max_k}, {"margin", margin}},
                   std::move(instances), opts.jobs);
}

VerificationReport check_size_vanishing(int max_lam, int max_mu, int max_k, int max_n, const SweepOptions& opts) {
  const Evaluator& eval = evaluator_of(opts);
  std::vector<Instance> instances;
  for (const auto& lam : enumerate_partitions_up_to(max_lam)) {
    for (const auto& mu : enumerate_partitions_up_to(max_mu)) {
      if (lam.size() <= mu.size()) continue;
      for (int k = 0; k <= max_k; ++k) {
        const std::string label = "lam=" + str(lam) + " mu=" + str(mu) + " k=" + std::to_string(k);
        instances.push_back({label, [&eval, lam, mu, k, max_n, label](Outcome& out) {
          for (int n = std::max(lam.size() + lam.first(), k); n <= max_n; ++n) {
            const Integer value = eval.rkron(pad(lam, n), mu, Partition::row(n - k));
            out.expect(value == 0, label + " n=" + std::to_string(n), "value " + str(value));
          }
        }});
      }
    }
  }
  return run_sweep("size", {{"max_lam", max_lam}, {"max_mu", max_mu}, {"max_k", max_k}, {"max_n", max_n}},
                   std::move(instances), opts.jobs);
}

VerificationReport check_triangle(int max_size, const SweepOptions& opts) {
  const Evaluator& eval = evaluator_of(opts);
  const auto all = enumerate_partitions_up_to(max_size);
  std::vector<Instance> instances;
  for (const auto& lam : all) {
    const std::string label = "lam=" + str(lam);
    instances.push_back({label, [&eval, &all, lam, label](Outcome& out) {
      for (const auto& mu : all)
        for (const auto& nu : all) {
          if (lam.size() + mu.size() >= nu.size()) continue;
          const Integer value = eval.rkron(lam, mu, nu);
          out.expect(value == 0, label + " mu=" + str(mu) + " nu=" + str(nu), "value " + str(value));
        }
    }});
  }
  return run_sweep("triangle", {{"max_size", max_size}}, std::move(instances), opts.jobs);
}

VerificationReport check_k_eq_lr(int max_size, const SweepOptions& opts) {
  const Evaluator& eval = evaluator_of(opts);
  const auto all = enumerate_partitions_up_to(max_size);
  std::vector<Instance> instances;
  for (const auto& lam : all) {
    const std::string label = "lam=" + str(lam);
    instances.push_back({label, [&eval, &all, lam, label](Outcome& out) {
      for (const auto& mu : all)
        for (const auto& nu : all) {
          if (lam.size() + mu.size() != nu.size()) continue;
          const Integer reduced = eval.rkron(lam, mu, nu);
          const Integer lr = eval.lr(lam, mu, nu);
          out.expect(reduced == lr, label + " mu=" + str(mu) + " nu=" + str(nu),
                     "reduced Kronecker " + str(reduced) + " vs LR " + str(lr));
        }
    }});
  }
  return run_sweep("k-eq-lr", {{"max_size", max_size}}, std::move(instances), opts.jobs);
}

VerificationReport check_onerow_formula(int max_lam, int max_mu, int max_k, const SweepOptions& opts) {
  const Evaluator& eval = evaluator_of(opts);
  std::vector<Instance> instances;
  for (const auto& lam : enumerate_partitions_up_to(max_lam)) {
    for (const auto& mu : enumerate_partitions_up_to(max_mu)) {
      const std::string label = "lam=" + str(lam) + " mu=" + str(mu);
      instances.push_back({label, [&eval, lam, mu, max_k, label](Outcome& out) {
        for (int k = 0; k <= max_k; ++k) {
          const Integer onerow = eval.rkron1row(lam, mu, k);
          const Integer general = eval.rkron(lam, mu, Partition::row(k));
          out.expect(onerow == general, label + " k=" + std::to_string(k),
                     "one-row sum " + str(onerow) + " vs general " + str(general));
        }
      }});
    }
  }
  return run_sweep("formula", {{"max_lam", max_lam}, {"max_mu", max_mu}, {"max_k", max_k}}, std::move(instances),
                   opts.jobs);
}

VerificationReport check_oracle_equiv(int max_size, int probe_cap, const SweepOptions& opts) {
  const Evaluator& eval = evaluator_of(opts);
  ScopedDegreeCap cap(probe_cap);
  const auto all = enumerate_partitions_up_to(max_size);
  std::vector<Instance> instances;
  for (const auto& lam : all) {
    for (const auto& mu : all) {
      const std::string label = "lam=" + str(lam) + " mu=" + str(mu);
      instances.push_back({label, [&eval, &all, lam, mu, label](Outcome& out) {
        for (const auto& nu : all) {
          const std::string at = label + " nu=" + str(nu);
          const Integer formula = eval.rkron(lam, mu, nu);
          try {
            const Integer limit = reduced_kronecker_limit(lam, mu, nu);
            out.expect(formula == limit, at, "formula " + str(formula) + " vs limit " + str(limit));
          } catch (const ComputationError& e) {
            out.expect(false, at, std::string("limit oracle failed: ") + e.what());
          }
        }
      }});
    }
  }
  return run_sweep("oracle-equiv", {{"max_size", max_size}, {"probe_cap", probe_cap}}, std::move(instances),
                   opts.jobs);
}

VerificationReport check_prop48(int max_mu, int max_lam, int max_i, int max_n, const SweepOptions& opts) {
  const Evaluator& eval = evaluator_of(opts);
  std::vector<Instance> instances;
  for (const auto& mu : enumerate_partitions_up_to(max_mu)) {
    for (const auto& lam : enumerate_partitions_up_to(max_lam)) {
      for (int i = 0; i <= max_i; ++i) {
        for (int m = std::max(lam.size(), mu.size()); m <= max_n; ++m) {
          const std::string label = "mu=" + str(mu) + " lam=" + str(lam) + " i=" + std::to_string(i) +
                                    " m=" + std::to_string(m);
          instances.push_back({label, [&eval, mu, lam, i, m, max_n, label](Outcome& out) {
            const int first_n = std::max(m, mu.size() + mu.first() + i);
            const int stable_from = std::max(first_n, lam.size() + mu.size() + i);
            std::optional<Integer> stable_value;
            for (int n = first_n; n <= max_n; ++n) {
              const Integer value = tau_multiplicity({mu, i, n, m, lam}, eval);
              const std::string at = label + " n=" + std::to_string(n);
              const std::string seen = "value " + str(value);
              if (lam.size() < m - i) out.expect(value == 0, "(a) " + at, seen);
              if (lam.size() == m - i && m - i < mu.size()) out.expect(value == 0, "(b) " + at, seen);
              if (lam.size() == m - i && m - i == mu.size())
                out.expect(value == (lam == mu ? 1 : 0), "(c) " + at, seen + ", expected delta " +
                                                                        std::to_string(lam == mu ? 1 : 0));
              if (n >= stable_from) {
                if (!stable_value)
                  stable_value = value;
                else
                  out.expect(value == *stable_value, "(d) " + at,
                             seen + " differs from " + str(*stable_value) + " at n=" + std::to_string(stable_from));
              }
            }
          }});
        }
      }
    }
  }
  return run_sweep("prop48", {{"max_mu", max_mu}, {"max_lam", max_lam}, {"max_i", max_i}, {"max_n", max_n}},
                   std::move(instances), opts.jobs);
}

VerificationReport check_prop412(int max_m, int max_n, const SweepOptions& opts) {
  const Evaluator& eval = evaluator_of(opts);
  std::vector<Instance> instances;
  for (int m = 0; m <= max_m; ++m) {
    for (const auto& mu : enumerate_partitions_up_to(m)) {
      for (int n = m; n <= max_n; ++n) {
        const std::string label = "m=" + std::to_string(m) + " mu=" + str(mu) + " n=" + std::to_string(n);
        instances.push_back({label, [&eval, mu, m, n, label](Outcome& out) {
          for (int i = 0; i <= n; ++i) {
            for (const auto& lam : enumerate_padded_index_set(n - i)) {
              if (i <= 2 * m && lam.size() <= m) continue;
              const Integer value = induced_multiplicity(mu, m, n, lam, i, eval);
              out.expect(value == 0, label + " lam=" + str(lam) + " i=" + std::to_string(i),
                         "value " + str(value) + (i > 2 * m ? " with i > 2m" : " with |lam| > m"));
            }
          }
        }});
      }
    }
  }
  return run_sweep("prop412", {{"max_m", max_m}, {"max_n", max_n}}, std::move(instances), opts.jobs);
}

const std::vector<std::string>& statement_names() {
  static const std::vector<std::string> names = {"lrflip", "kron-stab",    "size",   "triangle", "k-eq-lr",
                                                 "formula", "oracle-equiv", "prop48", "prop412"};
  return names;
}

std::map<std::string, int> default_box(std::string_view statement) {
  if (statement == "lrflip") return {{"max_core", 3}, {"max_xi", 4}};
  if (statement == "kron-stab") return {{"max_lam", 3}, {"max_mu", 3}, {"max_k", 3}, {"margin", 3}};
  if (statement == "size") return {{"max_lam", 3}, {"max_mu", 3}, {"max_k", 3}, {"max_n", 10}};
  if (statement == "triangle") return {{"max_size", 5}};
  if (statement == "k-eq-lr") return {{"max_size", 5}};
  if (statement == "formula") return {{"max_lam", 4}, {"max_mu", 4}, {"max_k", 6}};
  if (statement == "oracle-equiv") return {{"max_size", 3}, {"probe_cap", 13}};
  if (statement == "prop48") return {{"max_mu", 3}, {"max_lam", 3}, {"max_i", 3}, {"max_n", 14}};
  if (statement == "prop412") return {{"max_m", 3}, {"max_n", 12}};
  throw ArgumentError("unknown statement '" + std::string(statement) + "'");
}

std::vector<VerificationReport> run_verification(std::string_view statement,
                                                 const std::map<std::string, int>& overrides,
                                                 const SweepOptions& opts) {
  std::vector<std::string> selected;
  if (statement == "all")
    selected = statement_names();
  else
    selected.emplace_back(statement);

  std::vector<VerificationReport> reports;
  for (const auto& name : selected) {
    auto box = default_box(name);
    for (auto& [key, value] : box)
      if (auto it = overrides.find(key); it != overrides.end()) value = it->second;
    auto b = [&](const char* key) { return box.at(key); };
    if (name == "lrflip") reports.push_back(check_lrflip(b("max_core"), b("max_xi"), opts));
    else if (name == "kron-stab")
      reports.push_back(check_kroneckerstab(b("max_lam"), b("max_mu"), b("max_k"), b("margin"), opts));
    else if (name == "size")
      reports.push_back(check_size_vanishing(b("max_lam"), b("max_mu"), b("max_k"), b("max_n"), opts));
    else if (name == "triangle") reports.push_back(check_triangle(b("max_size"), opts));
    else if (name == "k-eq-lr") reports.push_back(check_k_eq_lr(b("max_size"), opts));
    else if (name == "formula") reports.push_back(check_onerow_formula(b("max_lam"), b("max_mu"), b("max_k"), opts));
    else if (name == "oracle-equiv") reports.push_back(check_oracle_equiv(b("max_size"), b("probe_cap"), opts));
    else if (name == "prop48")
      reports.push_back(check_prop48(b("max_mu"), b("max_lam"), b("max_i"), b("max_n"), opts));
    else if (name == "prop412") reports.push_back(check_prop412(b("max_m"), b("max_n"), opts));
  }
  return reports;
}

}  // namespace kronstab
