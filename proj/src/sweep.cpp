#include "hlf/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

namespace hlf {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

struct TupleKey {
    i64 g = 0;
    i64 n = 0;
    std::vector<i64> sep;

    friend bool operator<(const TupleKey& a, const TupleKey& b) {
        if (a.g != b.g) return a.g < b.g;
        if (a.n != b.n) return a.n < b.n;
        return a.sep < b.sep;
    }
    friend bool operator==(const TupleKey& a, const TupleKey& b) {
        return a.g == b.g && a.n == b.n && a.sep == b.sep;
    }
};

FibrationNumerics materialize(const TupleKey& k) {
    return FibrationNumerics(k.g, Int(k.n), std::vector<Int>(k.sep.begin(), k.sep.end()));
}

/// Keeps the lexicographically least `cap` keys seen; total count is exact.
struct CexCollector {
    std::size_t cap = 100;
    std::uint64_t total = 0;
    std::vector<TupleKey> heap;  // max-heap on TupleKey

    void add(const TupleKey& k) {
        ++total;
        if (cap == 0) return;
        if (heap.size() < cap) {
            heap.push_back(k);
            std::push_heap(heap.begin(), heap.end());
        } else if (k < heap.front()) {
            std::pop_heap(heap.begin(), heap.end());
            heap.back() = k;
            std::push_heap(heap.begin(), heap.end());
        }
    }
};

struct TallyAcc {
    std::uint64_t pass = 0, fail = 0, na = 0;
    CexCollector cex;
};

struct ExtAcc {
    bool set = false;
    Rational value;
    TupleKey at;
};

/// dir = +1 tracks the maximum, -1 the minimum; ties keep the lex-least key.
void ext_update(ExtAcc& e, const Rational& v, const TupleKey& k, int dir) {
    if (!e.set) {
        e.set = true;
        e.value = v;
        e.at = k;
        return;
    }
    const int c = v < e.value ? -1 : (e.value < v ? 1 : 0);
    if (c * dir > 0 || (c == 0 && k < e.at)) {
        e.value = v;
        e.at = k;
    }
}

void ext_merge(ExtAcc& into, const ExtAcc& from, int dir) {
    if (!from.set) return;
    if (!into.set) {
        into = from;
        return;
    }
    const int c = from.value < into.value ? -1 : (into.value < from.value ? 1 : 0);
    if (c * dir > 0 || (c == 0 && from.at < into.at)) into = from;
}

struct GenusExtAcc {
    ExtAcc max_ratio, min_total, max_slope, min_slope_spos;
};

/// Which registry checks run in the unconditional (whole-box) pass vs the
/// conditional (filtered) pass, plus the sweep-internal C14.lower key for
/// the unconditional half of C14.
constexpr int kUncondIdx[] = {0, 1, 19};  // C01, C02, C20

bool is_uncond_index(int idx) {
    return idx == 0 || idx == 1 || idx == 19;
}

struct Plan {
    SweepBox box;
    SweepOptions opt;
    bool use_kernels = false;
    kernels::KernelFn kernel = nullptr;
    bool run_c14_lower = false;
    std::vector<int> uncond_idx;  // registry indices among kUncondIdx
    std::vector<int> cond_idx;    // registry indices for the filtered pass
};

struct PartResult {
    std::uint64_t enumerated = 0;
    std::uint64_t admissible = 0;
    std::vector<TallyAcc> uncond;      // aligned to plan.uncond_idx
    TallyAcc c14_lower;
    std::vector<TallyAcc> cond;        // aligned to plan.cond_idx
    TallyAcc id_forms, id_roundtrip;
    std::map<i64, GenusExtAcc> extrema;
};

struct Partition {
    i64 g;
    Int comp_lo, comp_hi;  // [lo, hi) ranks in the lex composition order
};

Int comp_count(i64 slots, i64 budget) {
    Int r = 1;
    for (i64 i = 1; i <= slots; ++i) {
        r *= budget + i;
        r /= i;
    }
    return r;
}

std::vector<i64> unrank_composition(i64 slots, i64 budget, Int rank) {
    std::vector<i64> comp(static_cast<std::size_t>(slots), 0);
    i64 remaining = budget;
    for (i64 i = 0; i < slots; ++i) {
        const i64 rest = slots - 1 - i;
        i64 v = 0;
        for (;;) {
            const Int block = comp_count(rest, remaining - v);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        comp[static_cast<std::size_t>(i)] = v;
        remaining -= v;
    }
    return comp;
}

/// Identical successor rule to the admissible enumerator's, int64 space.
bool next_comp(std::vector<i64>& v, i64& sum, i64 budget) {
    const std::size_t d = v.size();
    if (sum < budget) {
        ++v[d - 1];
        ++sum;
        return true;
    }
    std::size_t j = d;
    for (std::size_t i = d; i-- > 0;)
        if (v[i] > 0) {
            j = i;
            break;
        }
    if (j == d || j == 0) return false;
    sum -= v[j] - 1;
    v[j] = 0;
    ++v[j - 1];
    return true;
}

i64 weighted_sum_i64(i64 g, const std::vector<i64>& comp) {
    i64 x = 0;
    for (std::size_t i = 0; i < comp.size(); ++i)
        x += static_cast<i64>(i + 1) * (g - static_cast<i64>(i + 1)) * comp[i];
    return x;
}

void process_partition_kernel(const Plan& plan, const Partition& part, PartResult& res) {
    const SweepBox& box = plan.box;
    const i64 g = part.g;
    const i64 D = 2 * g + 1;
    const i64 M = 4 * D;
    const i64 slots = g / 2;
    const bool want_integral = box.has_filter(Filter::integral_chi_h);
    const bool want_c05 = box.has_filter(Filter::signature_bound_c05);
    const bool want_div = box.has_filter(Filter::divisibility_c15_c16);
    GenusExtAcc& ext = res.extrema[g];

    std::vector<i64> comp = unrank_composition(slots, box.s_total_max, part.comp_lo);
    i64 sum = 0;
    for (i64 c : comp) sum += c;

    TupleKey key;
    key.g = g;

    for (Int rank = part.comp_lo; rank < part.comp_hi; ++rank) {
        const i64 s = sum;
        const i64 x = weighted_sum_i64(g, comp);
        res.enumerated += static_cast<std::uint64_t>(box.n_max);

        auto harvest = [&](TallyAcc& t, i64 n) {
            key.n = n;
            key.sep = comp;
            t.cex.add(key);
        };

        // C01 depends only on (g, s, x): one verdict covers every n lane.
        for (std::size_t u = 0; u < plan.uncond_idx.size(); ++u) {
            if (plan.uncond_idx[u] != 0) continue;
            TallyAcc& t = res.uncond[u];
            const bool ok = static_cast<i128>(s) * g <= static_cast<i128>(2) * x &&
                            static_cast<i128>(s) * (g - 1) <= x;
            if (ok) {
                t.pass += static_cast<std::uint64_t>(box.n_max);
            } else {
                t.fail += static_cast<std::uint64_t>(box.n_max);
                for (i64 n = 1; n <= box.n_max; ++n) harvest(t, n);
            }
        }

        // Identity masks are tallied over every tuple regardless of the
        // check selection, so the batch kernel always runs.
        for (i64 nb = 1; nb <= box.n_max; nb += 64) {
            kernels::Batch b;
            b.g = g;
            b.s = s;
            b.x = x;
            b.n_begin = nb;
            b.count = static_cast<int>(std::min<i64>(64, box.n_max - nb + 1));
            kernels::MaskSet m;
            plan.kernel(b, m);

            auto absorb = [&](TallyAcc& t, std::uint64_t viol) {
                const std::uint64_t lanes = static_cast<std::uint64_t>(b.count);
                const std::uint64_t bad = static_cast<std::uint64_t>(std::popcount(viol));
                t.pass += lanes - bad;
                t.fail += bad;
                while (viol) {
                    const int bit = std::countr_zero(viol);
                    viol &= viol - 1;
                    harvest(t, nb + bit);
                }
            };

            for (std::size_t u = 0; u < plan.uncond_idx.size(); ++u) {
                switch (plan.uncond_idx[u]) {
                    case 1: absorb(res.uncond[u], m.c02); break;
                    case 19: absorb(res.uncond[u], m.c20); break;
                    default: break;
                }
            }
            if (plan.run_c14_lower) absorb(res.c14_lower, m.c14_lower);
            absorb(res.id_forms, m.slope_forms);
            absorb(res.id_roundtrip, m.sig_roundtrip);
        }

        // Filtered pass: admissibility, extrema, conditional checks.
        i64 Fmod = (g + 4 * x % M) % M;  // F mod M at n=1, advanced by g per step
        const i64 gmod = g % M;
        for (i64 n = 1; n <= box.n_max; ++n) {
            bool pass = true;
            if (want_integral) pass = Fmod == 0;
            if (pass && want_c05) {
                const i64 signum = 4 * x - (g + 1) * n - D * s;
                pass = signum <= (n - s - 4) * D;
            }
            kernels::TupleScaled ts{g, n, s, x};
            if (pass && want_div)
                pass = kernels::eval_check_fast(14, ts) != kernels::FastVerdict::fails &&
                       kernels::eval_check_fast(15, ts) != kernels::FastVerdict::fails;
            Fmod += gmod;
            if (Fmod >= M) Fmod -= M;
            if (!pass) continue;

            ++res.admissible;
            key.n = n;
            key.sep = comp;
            ext_update(ext.max_ratio, Rational(Int(s), Int(n)), key, +1);
            ext_update(ext.min_total, Rational(Int(n + s)), key, -1);
            const i64 F = n * g + 4 * x;
            const i64 lam = 4 * (n * (g - 1) - D * s + 12 * x);
            const Rational slope_q{Int(lam), Int(F)};
            ext_update(ext.max_slope, slope_q, key, +1);
            if (s > 0) ext_update(ext.min_slope_spos, slope_q, key, -1);

            for (std::size_t ci = 0; ci < plan.cond_idx.size(); ++ci) {
                TallyAcc& t = res.cond[ci];
                switch (kernels::eval_check_fast(plan.cond_idx[ci], ts)) {
                    case kernels::FastVerdict::holds: ++t.pass; break;
                    case kernels::FastVerdict::not_applicable: ++t.na; break;
                    case kernels::FastVerdict::fails:
                        ++t.fail;
                        t.cex.add(key);
                        break;
                }
            }
        }

        if (rank + 1 < part.comp_hi && !next_comp(comp, sum, box.s_total_max))
            throw std::logic_error("sweep: composition walk ended before its partition");
    }
}

/// Exact-rational twin of process_partition_kernel, used when the box does
/// not fit the int64 gate. Same accumulators, same semantics.
void process_partition_rational(const Plan& plan, const Partition& part, PartResult& res) {
    const SweepBox& box = plan.box;
    const i64 g = part.g;
    const i64 slots = g / 2;
    const bool want_integral = box.has_filter(Filter::integral_chi_h);
    const bool want_c05 = box.has_filter(Filter::signature_bound_c05);
    const bool want_div = box.has_filter(Filter::divisibility_c15_c16);
    GenusExtAcc& ext = res.extrema[g];
    const auto& registry = check_registry();

    std::vector<i64> comp = unrank_composition(slots, box.s_total_max, part.comp_lo);
    i64 sum = 0;
    for (i64 c : comp) sum += c;

    TupleKey key;
    key.g = g;

    for (Int rank = part.comp_lo; rank < part.comp_hi; ++rank) {
        for (i64 n = 1; n <= box.n_max; ++n) {
            ++res.enumerated;
            key.n = n;
            key.sep = comp;
            const FibrationNumerics f = materialize(key);
            const InvariantSet inv = compute_invariants(f);

            auto tally_verdict = [&](TallyAcc& t, Verdict v) {
                switch (v) {
                    case Verdict::holds: ++t.pass; break;
                    case Verdict::not_applicable: ++t.na; break;
                    case Verdict::fails:
                        ++t.fail;
                        t.cex.add(key);
                        break;
                }
            };

            for (std::size_t u = 0; u < plan.uncond_idx.size(); ++u) {
                const auto& info = registry[static_cast<std::size_t>(plan.uncond_idx[u])];
                tally_verdict(res.uncond[u], run_check(info.id, f, inv).verdict);
            }
            if (plan.run_c14_lower) {
                const Int E = f.n * g + 4 * inv.s * (g - 1);
                const Rational lower = Rational(4 * (Int(g) - 1), Int(g)) +
                                       Rational(4 * inv.s * (2 * Int(g) + 1) * (3 * Int(g) - 4),
                                                Int(g) * E);
                tally_verdict(res.c14_lower,
                              lower <= inv.slope ? Verdict::holds : Verdict::fails);
            }
            {
                const SlopeForms forms = slope_alternate_forms(f);
                const Rational kroute = inv.k_f_sq / inv.chi_f;
                const bool agree = forms.via_chi_f == inv.slope &&
                                   forms.via_sigma_deficit == inv.slope &&
                                   forms.via_sigma_excess == inv.slope && kroute == inv.slope;
                tally_verdict(res.id_forms, agree ? Verdict::holds : Verdict::fails);
                const bool rt = signature_from_slope(inv.slope, f.n + inv.s) == inv.sigma;
                tally_verdict(res.id_roundtrip, rt ? Verdict::holds : Verdict::fails);
            }

            bool pass = true;
            if (want_integral) pass = integral_chi_h(inv);
            if (pass && want_c05) pass = inv.sigma <= Rational(f.n - inv.s - 4);
            if (pass && want_div)
                pass = run_check("C15", f, inv).verdict != Verdict::fails &&
                       run_check("C16", f, inv).verdict != Verdict::fails;
            if (!pass) continue;

            ++res.admissible;
            ext_update(ext.max_ratio, inv.ratio, key, +1);
            ext_update(ext.min_total, Rational(f.n + inv.s), key, -1);
            ext_update(ext.max_slope, inv.slope, key, +1);
            if (inv.s > 0) ext_update(ext.min_slope_spos, inv.slope, key, -1);

            for (std::size_t ci = 0; ci < plan.cond_idx.size(); ++ci) {
                const auto& info = registry[static_cast<std::size_t>(plan.cond_idx[ci])];
                tally_verdict(res.cond[ci], run_check(info.id, f, inv).verdict);
            }
        }
        if (rank + 1 < part.comp_hi && !next_comp(comp, sum, box.s_total_max))
            throw std::logic_error("sweep: composition walk ended before its partition");
    }
}

std::vector<Counterexample> materialize_counterexamples(const std::string& check_id,
                                                        std::vector<TupleKey> keys,
                                                        std::size_t cap) {
    std::sort(keys.begin(), keys.end());
    if (keys.size() > cap) keys.resize(cap);
    std::vector<Counterexample> out;
    out.reserve(keys.size());
    for (const TupleKey& k : keys) {
        const FibrationNumerics f = materialize(k);
        if (check_id == "C14.lower") {
            const InvariantSet inv = compute_invariants(f);
            const Int g(f.g);
            const Int E = f.n * g + 4 * inv.s * (g - 1);
            const Rational lower =
                Rational(4 * (g - 1), g) + Rational(4 * inv.s * (2 * g + 1) * (3 * g - 4), g * E);
            if (lower <= inv.slope)
                throw std::logic_error("sweep: kernel/reference mismatch on C14.lower at " +
                                       to_string(f));
            CheckResult r = run_check("C14", f, inv);
            r.check_id = "C14.lower";
            out.push_back({f, std::move(r)});
            continue;
        }
        CheckResult r = run_check(check_id, f);
        if (r.verdict != Verdict::fails)
            throw std::logic_error("sweep: kernel/reference mismatch on " + check_id + " at " +
                                   to_string(f));
        out.push_back({f, std::move(r)});
    }
    return out;
}

std::vector<std::string> materialize_identity_failures(const std::string& which,
                                                       std::vector<TupleKey> keys,
                                                       std::size_t cap) {
    std::sort(keys.begin(), keys.end());
    if (keys.size() > cap) keys.resize(cap);
    std::vector<std::string> out;
    out.reserve(keys.size());
    for (const TupleKey& k : keys) {
        const FibrationNumerics f = materialize(k);
        const InvariantSet inv = compute_invariants(f);
        bool agree;
        if (which == "slope_forms") {
            const SlopeForms forms = slope_alternate_forms(f);
            agree = forms.via_chi_f == inv.slope && forms.via_sigma_deficit == inv.slope &&
                    forms.via_sigma_excess == inv.slope && inv.k_f_sq / inv.chi_f == inv.slope;
        } else {
            agree = signature_from_slope(inv.slope, f.n + inv.s) == inv.sigma;
        }
        if (agree)
            throw std::logic_error("sweep: kernel/reference mismatch on identity " + which +
                                   " at " + to_string(f));
        out.push_back(to_string(f));
    }
    return out;
}

}  // namespace

std::uint64_t SweepReport::total_failures() const {
    std::uint64_t total = 0;
    for (const auto& [id, tally] : per_check) total += tally.fail;
    for (const auto& [id, tally] : identities) total += tally.fail;
    return total;
}

SweepReport verify_theorems(const SweepBox& box, const SweepOptions& opt) {
    box.validate();

    Plan plan;
    plan.box = box;
    plan.opt = opt;

    const auto& registry = check_registry();
    std::vector<bool> selected(registry.size(), false);
    if (opt.check_ids.empty()) {
        selected.assign(registry.size(), true);
    } else {
        for (const std::string& id : opt.check_ids) {
            bool found = false;
            for (std::size_t i = 0; i < registry.size(); ++i)
                if (id == registry[i].id) {
                    selected[i] = true;
                    found = true;
                }
            if (!found)
                throw std::invalid_argument("sweep: unknown check id '" + id + "'");
        }
    }

    for (int idx : kUncondIdx)
        if (selected[static_cast<std::size_t>(idx)]) plan.uncond_idx.push_back(idx);
    plan.run_c14_lower = selected[13];
    for (std::size_t i = 0; i < registry.size(); ++i)
        if (selected[i] && !is_uncond_index(static_cast<int>(i)))
            plan.cond_idx.push_back(static_cast<int>(i));

    // Resolving up front validates an explicitly requested implementation
    // even when the box forces the rational fallback.
    plan.kernel = kernels::get_kernel(opt.kernel);
    plan.use_kernels =
        !opt.force_exact &&
        kernels::bounds_fit_int64(box.g_min, box.g_max, box.n_max, box.s_total_max);

    // Static partitioning: fixed composition chunks per genus, independent
    // of the thread count, merged in construction order.
    constexpr i64 kChunk = 4096;
    std::vector<Partition> parts;
    for (i64 g = box.g_min; g <= box.g_max; ++g) {
        const Int total = comp_count(g / 2, box.s_total_max);
        for (Int lo = 0; lo < total; lo += kChunk)
            parts.push_back({g, lo, std::min(Int(lo + kChunk), total)});
    }

    std::vector<PartResult> results(parts.size());
    for (PartResult& r : results) {
        r.uncond.resize(plan.uncond_idx.size());
        r.cond.resize(plan.cond_idx.size());
        const std::size_t cap = opt.counterexample_cap;
        for (auto& t : r.uncond) t.cex.cap = cap;
        for (auto& t : r.cond) t.cex.cap = cap;
        r.c14_lower.cex.cap = cap;
        r.id_forms.cex.cap = cap;
        r.id_roundtrip.cex.cap = cap;
    }

    int threads = opt.threads > 0 ? opt.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, static_cast<int>(parts.size()));
    if (threads == 0) threads = 1;

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= parts.size()) return;
            try {
                if (plan.use_kernels)
                    process_partition_kernel(plan, parts[i], results[i]);
                else
                    process_partition_rational(plan, parts[i], results[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    // Deterministic merge in partition order.
    SweepReport report;
    report.box = box;

    struct MergedTally {
        std::uint64_t pass = 0, fail = 0, na = 0;
        std::vector<TupleKey> keys;
    };
    auto merge_tally = [](MergedTally& into, const TallyAcc& from) {
        into.pass += from.pass;
        into.fail += from.fail;
        into.na += from.na;
        into.keys.insert(into.keys.end(), from.cex.heap.begin(), from.cex.heap.end());
    };

    std::vector<MergedTally> uncond_m(plan.uncond_idx.size());
    std::vector<MergedTally> cond_m(plan.cond_idx.size());
    MergedTally c14l_m, forms_m, rt_m;
    std::map<i64, GenusExtAcc> ext_m;

    for (const PartResult& r : results) {
        report.tuples_enumerated += r.enumerated;
        report.tuples_admissible += r.admissible;
        for (std::size_t u = 0; u < uncond_m.size(); ++u) merge_tally(uncond_m[u], r.uncond[u]);
        for (std::size_t c = 0; c < cond_m.size(); ++c) merge_tally(cond_m[c], r.cond[c]);
        merge_tally(c14l_m, r.c14_lower);
        merge_tally(forms_m, r.id_forms);
        merge_tally(rt_m, r.id_roundtrip);
        for (const auto& [g, ge] : r.extrema) {
            GenusExtAcc& into = ext_m[g];
            ext_merge(into.max_ratio, ge.max_ratio, +1);
            ext_merge(into.min_total, ge.min_total, -1);
            ext_merge(into.max_slope, ge.max_slope, +1);
            ext_merge(into.min_slope_spos, ge.min_slope_spos, -1);
        }
    }

    auto finish_check = [&](const std::string& id, MergedTally& m) {
        CheckTally out;
        out.pass = m.pass;
        out.fail = m.fail;
        out.not_applicable = m.na;
        out.counterexamples =
            materialize_counterexamples(id, std::move(m.keys), opt.counterexample_cap);
        out.capped = out.fail > out.counterexamples.size();
        report.per_check[id] = std::move(out);
    };

    for (std::size_t u = 0; u < uncond_m.size(); ++u)
        finish_check(registry[static_cast<std::size_t>(plan.uncond_idx[u])].id, uncond_m[u]);
    if (plan.run_c14_lower) finish_check("C14.lower", c14l_m);
    for (std::size_t c = 0; c < cond_m.size(); ++c)
        finish_check(registry[static_cast<std::size_t>(plan.cond_idx[c])].id, cond_m[c]);

    auto finish_identity = [&](const std::string& which, MergedTally& m) {
        IdentityTally out;
        out.pass = m.pass;
        out.fail = m.fail;
        out.failing_tuples =
            materialize_identity_failures(which, std::move(m.keys), opt.counterexample_cap);
        report.identities[which] = std::move(out);
    };
    finish_identity("slope_forms", forms_m);
    finish_identity("signature_roundtrip", rt_m);

    for (const auto& [g, ge] : ext_m) {
        GenusExtrema out;
        auto fill = [](ExtremeValue& dst, const ExtAcc& src) {
            if (!src.set) return;
            dst.set = true;
            dst.value = src.value;
            dst.at = materialize(src.at);
        };
        fill(out.max_ratio, ge.max_ratio);
        fill(out.min_total, ge.min_total);
        fill(out.max_slope, ge.max_slope);
        fill(out.min_slope_spos, ge.min_slope_spos);
        report.extrema[g] = std::move(out);
    }

    return report;
}

}  // namespace hlf
