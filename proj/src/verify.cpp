#include "qpos/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "qpos/enumerator.hpp"
#include "qpos/expansion.hpp"
#include "qpos/io.hpp"
#include "qpos/oracle.hpp"
#include "qpos/poset.hpp"
#include "qpos/qsym.hpp"

namespace qpos {

namespace {

using Classes = std::vector<std::vector<Poset>>; // index = n

// Runs fn(i) for i in [0, count), optionally across threads.  Result slots
// keep index order, so every report derived from them is byte-identical
// regardless of thread count.
template <typename Fn>
std::vector<char> parallel_flags(std::size_t count, int threads, Fn&& fn) {
  std::vector<char> ok(count, 1);
  auto eval = [&](std::size_t i) {
    try {
      ok[i] = fn(i) ? 1 : 0;
    } catch (...) {
      ok[i] = 0;
    }
  };
  if (threads > 1 && count > 1) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        eval(i);
      }
    };
    std::vector<std::thread> pool;
    std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    for (std::size_t k = 0; k < want; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  } else {
    for (std::size_t i = 0; i < count; ++i) eval(i);
  }
  return ok;
}

struct SuiteResult {
  bool ok;
  std::string line;
};

std::string count_string(const Classes& classes, int max_n) {
  std::ostringstream os;
  for (int n = max_n; n >= 1; --n) {
    if (n != max_n) os << '+';
    os << classes[n].size();
  }
  return os.str();
}

std::string fail_line(const std::string& suite, const Poset& p) {
  return suite + ": FAIL at " + to_json(document_of(p));
}

std::vector<const Poset*> flatten(const Classes& classes, int max_n) {
  std::vector<const Poset*> items;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& p : classes[n]) items.push_back(&p);
  return items;
}

template <typename Check>
SuiteResult per_poset_suite(const std::string& name, const Classes& classes,
                            const VerifyOptions& opt, bool with_m, Check&& check) {
  auto items = flatten(classes, opt.max_n);
  auto ok = parallel_flags(items.size(), opt.threads,
                           [&](std::size_t i) { return check(*items[i]); });
  for (std::size_t i = 0; i < items.size(); ++i)
    if (!ok[i]) return {false, fail_line(name, *items[i])};
  std::string line = name + ": " + count_string(classes, opt.max_n) + " posets";
  if (with_m) line += ", m<=" + std::to_string(opt.trunc_m);
  return {true, line + ": all pass"};
}

SuiteResult suite_oracle(const Classes& classes, const VerifyOptions& opt) {
  return per_poset_suite("oracle", classes, opt, true, [&](const Poset& p) {
    QSym fq = fq_poset_cone(p);
    for (int m = 1; m <= opt.trunc_m; ++m)
      if (!(truncate(fq, m) == fq_integer_points(p, m))) return false;
    return true;
  });
}

SuiteResult suite_antipode(const Classes& classes, const VerifyOptions& opt) {
  return per_poset_suite("antipode", classes, opt, false, [](const Poset& p) {
    return antipode(fq_poset_cone(p)) == antipode_rhs(p);
  });
}

SuiteResult suite_opposite(const Classes& classes, const VerifyOptions& opt) {
  return per_poset_suite("opposite", classes, opt, false,
                         [](const Poset& p) { return opposite_identity_check(p); });
}

SuiteResult suite_hopf(const Classes& classes, const VerifyOptions& opt) {
  std::vector<std::pair<const Poset*, const Poset*>> pairs;
  for (int n1 = 1; n1 < opt.max_n; ++n1)
    for (int n2 = 1; n1 + n2 <= opt.max_n; ++n2)
      for (const auto& a : classes[n1])
        for (const auto& b : classes[n2]) pairs.emplace_back(&a, &b);
  auto pair_ok = parallel_flags(pairs.size(), opt.threads, [&](std::size_t i) {
    return hopf_product_check(*pairs[i].first, *pairs[i].second);
  });
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!pair_ok[i])
      return {false, "hopf: FAIL at " + to_json(document_of(*pairs[i].first)) + " x " +
                         to_json(document_of(*pairs[i].second))};

  std::vector<const Poset*> singles = flatten(classes, opt.max_n - 1);
  auto single_ok = parallel_flags(singles.size(), opt.threads, [&](std::size_t i) {
    return hopf_coproduct_check(*singles[i]);
  });
  for (std::size_t i = 0; i < singles.size(); ++i)
    if (!single_ok[i]) return {false, fail_line("hopf", *singles[i])};

  return {true, "hopf: " + std::to_string(pairs.size()) + " pairs, " +
                    std::to_string(singles.size()) + " posets: all pass"};
}

SuiteResult suite_ppartition(const Classes& classes, const VerifyOptions& opt) {
  return per_poset_suite("ppartition", classes, opt, true, [&](const Poset& p) {
    Poset w = well_labelling(p);
    QSym base = f0(p);
    for (int m = 1; m <= opt.trunc_m; ++m)
      if (!(truncate(base, m) == ppartitions_bruteforce(w, m))) return false;
    if (p.size() <= 4) {
      QSym ext = ppartitions_via_extensions(p);
      for (int m = 1; m <= opt.trunc_m; ++m)
        if (!(truncate(ext, m) == ppartitions_bruteforce(p, m))) return false;
    }
    return true;
  });
}

SuiteResult suite_euler(const Classes& classes, const VerifyOptions& opt) {
  return per_poset_suite("euler", classes, opt, false,
                         [](const Poset& p) { return euler_flag_identity(p); });
}

SuiteResult suite_faces(const Classes& classes, const VerifyOptions& opt) {
  return per_poset_suite("faces", classes, opt, false, [](const Poset& p) {
    if (!(face_count_polynomial(p) == f_polynomial(p))) return false;
    auto cycles = comparability_cycles(p);
    bool quotients_ok = true;
    for_each_ideal_flag(p, [&](const Flag& f) {
      if (quotients_ok && !is_positive_subposet(p, quotient(p, f), cycles))
        quotients_ok = false;
    });
    if (!quotients_ok) return false;
    if (p.size() <= 4 && !positive_subposet_cross_check(p)) return false;
    return true;
  });
}

SuiteResult dispatch_suite(const std::string& name, const Classes& classes,
                           const VerifyOptions& opt) {
  if (name == "oracle") return suite_oracle(classes, opt);
  if (name == "antipode") return suite_antipode(classes, opt);
  if (name == "opposite") return suite_opposite(classes, opt);
  if (name == "hopf") return suite_hopf(classes, opt);
  if (name == "ppartition") return suite_ppartition(classes, opt);
  if (name == "euler") return suite_euler(classes, opt);
  return suite_faces(classes, opt);
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"oracle", "antipode", "opposite", "hopf", "ppartition", "euler", "faces"};
}

VerifyOutcome run_verify(const VerifyOptions& opt) {
  if (opt.max_n < 1 || opt.max_n > 6)
    throw std::invalid_argument("max-n must be between 1 and 6");
  if (opt.trunc_m < 1) throw std::invalid_argument("trunc-m must be at least 1");
  if (opt.threads < 1) throw std::invalid_argument("threads must be at least 1");
  auto names = verify_suite_names();
  for (const auto& s : opt.suites)
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw std::invalid_argument("unknown suite '" + s + "'");
  std::vector<std::string> chosen;
  for (const auto& name : names) {
    if (opt.suites.empty() ||
        std::find(opt.suites.begin(), opt.suites.end(), name) != opt.suites.end())
      chosen.push_back(name);
  }

  Classes classes(opt.max_n + 1);
  for (int n = 1; n <= opt.max_n; ++n) classes[n] = all_posets(n);

  VerifyOutcome out;
  std::ostringstream rep;
  for (const auto& name : chosen) {
    SuiteResult r = dispatch_suite(name, classes, opt);
    if (!r.ok) out.ok = false;
    rep << r.line << '\n';
  }
  out.report = rep.str();
  return out;
}

VerifyOutcome run_survey(int max_n, int threads) {
  if (max_n < 1 || max_n > 6)
    throw std::invalid_argument("max-n must be between 1 and 6");
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  VerifyOutcome out;
  std::ostringstream rep;
  for (int n = 1; n <= max_n; ++n) {
    auto classes = all_posets(n);
    std::vector<std::string> key(classes.size());
    parallel_flags(classes.size(), threads, [&](std::size_t i) {
      key[i] = render_text(f0(classes[i]), Basis::monomial);
      return true;
    });
    std::map<std::string, long> groups;
    for (const auto& k : key) ++groups[k];
    long collisions = 0;
    for (const auto& [k, count] : groups) collisions += count * (count - 1) / 2;
    rep << classes.size() << (classes.size() == 1 ? " class at n=" : " classes at n=")
        << n << ", " << collisions << (collisions == 1 ? " collision" : " collisions")
        << '\n';
  }
  out.report = rep.str();
  return out;
}

VerifyOutcome run_collision_search(int n, int threads) {
  if (n < 1 || n > 7) throw std::invalid_argument("n must be between 1 and 7");
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  auto classes = all_posets(n);
  std::vector<std::string> key(classes.size());
  parallel_flags(classes.size(), threads, [&](std::size_t i) {
    key[i] = render_text(f0(classes[i]), Basis::monomial);
    return true;
  });
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < key.size(); ++i) groups[key[i]].push_back(i);

  std::map<std::size_t, QSym> fq_cache;
  auto fq_of = [&](std::size_t i) -> const QSym& {
    auto it = fq_cache.find(i);
    if (it == fq_cache.end())
      it = fq_cache.emplace(i, fq_poset_cone(classes[i])).first;
    return it->second;
  };

  VerifyOutcome out;
  for (const auto& [k, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const QSym& fa = fq_of(members[a]);
        const QSym& fb = fq_of(members[b]);
        if (fa == fb) continue;
        std::ostringstream rep;
        rep << "pair found\n";
        rep << "P = " << to_json(document_of(classes[members[a]])) << '\n';
        rep << "Q = " << to_json(document_of(classes[members[b]])) << '\n';
        for (const auto& alpha : compositions_of(n)) {
          QPoly ca = fa.coefficient(alpha);
          QPoly cb = fb.coefficient(alpha);
          if (!(ca == cb)) {
            rep << "alpha " << alpha.to_string() << ": " << ca.to_string() << " vs "
                << cb.to_string() << '\n';
            break;
          }
        }
        out.report = rep.str();
        return out;
      }
    }
  }
  out.report = "no pair found\n";
  return out;
}

}  // namespace qpos
