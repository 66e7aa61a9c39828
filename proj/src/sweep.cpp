#include <weilptb/sweep.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include <weilptb/error.hpp>
#include <weilptb/parse.hpp>
#include <weilptb/report.hpp>

namespace weilptb {

namespace {

std::int64_t mod2(std::int64_t k)
{
    return ((k % 2) + 2) % 2;
}

std::vector<GaussianRational> default_grid()
{
    return {GaussianRational(0), GaussianRational(make_rational(1, 2)), GaussianRational(make_rational(-1, 2)),
            GaussianRational(1), GaussianRational(-1)};
}

template <typename T>
const T &pick(std::mt19937_64 &rng, const std::vector<T> &v)
{
    std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
    return v[d(rng)];
}

std::int64_t uniform(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::vector<std::int64_t> fixed_point_ks(const SweepConfig &cfg, DivAlg d, std::int64_t l)
{
    std::vector<std::int64_t> out;
    const std::int64_t al = std::llabs(l);
    for (std::int64_t k = std::max<std::int64_t>(1, cfg.k_min); k <= cfg.k_max; ++k) {
        if (mod2(k - l) == 0) {
            continue;
        }
        if (d == DivAlg::R ? al > k : al < k) {
            out.push_back(k);
        }
    }
    return out;
}

EssDiscrete random_block(std::mt19937_64 &rng, const SweepConfig &cfg, DivAlg d)
{
    const GaussianRational &lam = pick(rng, cfg.lambda);
    if (d == DivAlg::H) {
        return EssDiscrete::t(uniform(rng, std::max<std::int64_t>(1, cfg.k_min), cfg.k_max), lam);
    }
    if (uniform(rng, 0, 1) == 0) {
        return EssDiscrete::p1(uniform(rng, 0, 1), lam);
    }
    return EssDiscrete::p2(uniform(rng, std::max<std::int64_t>(1, cfg.k_min), cfg.k_max), lam);
}

// Builds r blocks around an involution: fixed points are distinguished ESI
// blocks, 2-cycles are chi-twisted dual pairs.
std::vector<EssDiscrete> constructed_blocks(std::mt19937_64 &rng, const SweepConfig &cfg, DivAlg d,
                                            const HeckeCharacter &chi)
{
    const int r = static_cast<int>(uniform(rng, 1, cfg.max_blocks));
    const auto fixed_ks = fixed_point_ks(cfg, d, chi.l);
    std::vector<EssDiscrete> blocks;
    int remaining = r;
    while (remaining > 0) {
        const bool can_fix = !fixed_ks.empty();
        const bool fix = remaining == 1 || (can_fix && uniform(rng, 0, 2) == 0);
        if (fix) {
            if (!can_fix) {
                break;
            }
            const std::int64_t k = pick(rng, fixed_ks);
            const GaussianRational lam = chi.eta * GaussianRational(make_rational(1, 2));
            blocks.push_back(d == DivAlg::R ? EssDiscrete::p2(k, lam) : EssDiscrete::t(k, lam));
            remaining -= 1;
            continue;
        }
        const EssDiscrete first = random_block(rng, cfg, d);
        blocks.push_back(first);
        blocks.push_back(twist_by_chi(dual_block(first), chi));
        remaining -= 2;
    }
    std::shuffle(blocks.begin(), blocks.end(), rng);
    return blocks;
}

std::vector<EssDiscrete> random_blocks(std::mt19937_64 &rng, const SweepConfig &cfg, DivAlg d)
{
    const int r = static_cast<int>(uniform(rng, 1, cfg.max_blocks));
    std::vector<EssDiscrete> blocks;
    int size = 0;
    for (int i = 0; i < r; ++i) {
        blocks.push_back(random_block(rng, cfg, d));
        size += blocks.back().block_size();
    }
    // GL_{2n}(R) needs an even total; fix parity with one more P1 or by
    // widening a P1 when the block budget is spent.
    if (d == DivAlg::R && size % 2 != 0) {
        if (r < cfg.max_blocks) {
            blocks.push_back(EssDiscrete::p1(uniform(rng, 0, 1), pick(rng, cfg.lambda)));
        } else {
            auto it = std::find_if(blocks.begin(), blocks.end(),
                                   [](const EssDiscrete &b) { return b.kind() == EssDiscrete::Kind::P1; });
            *it = EssDiscrete::p2(uniform(rng, std::max<std::int64_t>(1, cfg.k_min), cfg.k_max), it->lambda());
        }
    }
    return blocks;
}

std::vector<GaussianRational> gauss_list(const nlohmann::json &j)
{
    std::vector<GaussianRational> out;
    for (const auto &v : j) {
        if (v.is_number_integer()) {
            out.emplace_back(v.get<std::int64_t>());
        } else {
            out.push_back(parse_gauss(v.get<std::string>()));
        }
    }
    if (out.empty()) {
        throw Error(Errc::invalid_argument, "grid must be nonempty");
    }
    return out;
}

void range(const nlohmann::json &j, const char *key, std::int64_t &lo, std::int64_t &hi)
{
    if (!j.contains(key)) {
        return;
    }
    const auto &v = j.at(key);
    if (!v.is_array() || v.size() != 2) {
        throw Error(Errc::invalid_argument, std::string(key) + " must be [min, max]");
    }
    lo = v[0].get<std::int64_t>();
    hi = v[1].get<std::int64_t>();
    if (lo > hi) {
        throw Error(Errc::invalid_argument, std::string(key) + " range is empty");
    }
}

Failure failure(const std::string &check, const Sample &s, const std::string &detail)
{
    return {check, to_string(s.sm.D()), to_string(s.sm), to_string(s.chi), detail};
}

// Root-number and corollary checks shared by grid and family.
void common_checks(const Sample &s, const DistinctionReport &rep, std::vector<Failure> &fails, std::size_t &rootnums)
{
    const IrrRepGL pi(s.sm);
    const WeilRep phi = llc(pi);
    for (const WeilRep &cand : {phi, tensor(phi, ind_chi_inverse(s.chi))}) {
        if (dual(cand) != cand || det_rep(cand) != WeilIrred::one_dim(0, 0)) {
            continue;
        }
        ++rootnums;
        if (const std::string why = check_root_number_well_defined(cand); !why.empty()) {
            fails.push_back(failure("root_number", s, why));
        }
    }
    for (const auto &v : rep.violations) {
        fails.push_back(failure("main_theorem", s, v));
    }
    if (!check_duality_corollary(s.sm, s.chi)) {
        fails.push_back(failure("duality_corollary", s, "pi is not isomorphic to its chi-twisted contragredient"));
    }
}

} // namespace

SweepConfig SweepConfig::defaults()
{
    SweepConfig c;
    c.lambda = default_grid();
    c.eta = default_grid();
    return c;
}

SweepConfig SweepConfig::from_json(const nlohmann::json &j)
{
    SweepConfig c = defaults();
    try {
        if (j.contains("D")) {
            c.D.clear();
            for (const auto &d : j.at("D")) {
                c.D.push_back(parse_divalg(d.get<std::string>()));
            }
        }
        range(j, "k", c.k_min, c.k_max);
        range(j, "l", c.l_min, c.l_max);
        if (c.k_min < 1) {
            throw Error(Errc::invalid_argument, "k range must start at 1 or above");
        }
        if (j.contains("lambda")) {
            c.lambda = gauss_list(j.at("lambda"));
        }
        if (j.contains("eta")) {
            c.eta = gauss_list(j.at("eta"));
        }
        c.max_blocks = j.value("max_blocks", c.max_blocks);
        c.seed = j.value("seed", c.seed);
        c.samples = j.value("samples", c.samples);
        c.esi_diagonal_only = j.value("esi_diagonal_only", c.esi_diagonal_only);
    } catch (const nlohmann::json::exception &e) {
        throw Error(Errc::invalid_argument, std::string("sweep config: ") + e.what());
    }
    if (c.max_blocks < 1 || c.samples < 0 || c.D.empty()) {
        throw Error(Errc::invalid_argument, "sweep config: need max_blocks >= 1, samples >= 0 and a nonempty D list");
    }
    return c;
}

std::vector<Sample> esi_grid(const SweepConfig &cfg)
{
    std::vector<Sample> out;
    for (DivAlg d : cfg.D) {
        for (std::int64_t k = cfg.k_min; k <= cfg.k_max; ++k) {
            for (std::int64_t l = cfg.l_min; l <= cfg.l_max; ++l) {
                for (const auto &lam : cfg.lambda) {
                    for (const auto &eta : cfg.eta) {
                        if (cfg.esi_diagonal_only && lam + lam != eta) {
                            continue;
                        }
                        const EssDiscrete b = d == DivAlg::R ? EssDiscrete::p2(k, lam) : EssDiscrete::t(k, lam);
                        out.push_back({make_standard(d, {b}), {l, eta}});
                    }
                }
            }
        }
    }
    return out;
}

std::vector<Sample> generate_family(const SweepConfig &cfg)
{
    std::mt19937_64 rng(cfg.seed);
    std::vector<Sample> out;
    out.reserve(static_cast<std::size_t>(cfg.samples));
    for (int n = 0; n < cfg.samples; ++n) {
        const DivAlg d = pick(rng, cfg.D);
        const HeckeCharacter chi{uniform(rng, cfg.l_min, cfg.l_max), pick(rng, cfg.eta)};
        std::vector<EssDiscrete> blocks =
            n % 5 == 4 ? random_blocks(rng, cfg, d) : constructed_blocks(rng, cfg, d, chi);
        if (blocks.empty()) {
            blocks = random_blocks(rng, cfg, d);
        }
        out.push_back({make_standard(d, std::move(blocks)), chi});
    }
    return out;
}

unsigned worker_count()
{
    if (const char *env = std::getenv("WEIL_PTB_THREADS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)> &f)
{
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            f(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

std::string check_root_number_well_defined(const WeilRep &phi)
{
    const GaussianRational half(make_rational(1, 2));
    const auto &samples = root_number_samples();
    const MagUnitValue first = epsilon(half, phi, samples.front());
    for (const auto &a : samples) {
        const MagUnitValue v = epsilon(half, phi, a);
        if (v != first) {
            return "epsilon(1/2) differs between a = " + to_string(samples.front()) + " and a = " + to_string(a);
        }
    }
    if (muv_mul(first, first) != MagUnitValue()) {
        return "epsilon(1/2)^2 = " + to_string(muv_mul(first, first));
    }
    return {};
}

SweepResult run_sweep(const SweepConfig &cfg)
{
    SweepResult res;
    const std::vector<Sample> grid = esi_grid(cfg);
    const std::vector<Sample> family = generate_family(cfg);
    res.esi_points = grid.size();
    res.family_size = family.size();
    res.esi_reports.resize(grid.size());
    res.family_reports.resize(family.size());

    struct Local {
        std::vector<Failure> fails;
        std::size_t rootnums = 0;
    };
    std::vector<Local> grid_local(grid.size());
    std::vector<Local> family_local(family.size());

    parallel_for(grid.size(), [&](std::size_t i) {
        const Sample &s = grid[i];
        Local &loc = grid_local[i];
        const DistinctionReport rep = check_main_theorem(s.sm, s.chi);
        const EssDiscrete &b = s.sm.blocks().front();
        const bool lhs = esi_distinguished(b, s.chi);
        const bool rhs = rep.gsp_ok && *rep.identity_ok;
        if (lhs != rhs) {
            loc.fails.push_back(failure("esi_equivalence", s,
                                        std::string("distinguished = ") + (lhs ? "true" : "false") +
                                            ", conditions = " + (rhs ? "true" : "false")));
        }
        common_checks(s, rep, loc.fails, loc.rootnums);
        res.esi_reports[i] = rep;
    });
    parallel_for(family.size(), [&](std::size_t i) {
        const Sample &s = family[i];
        Local &loc = family_local[i];
        const DistinctionReport rep = check_main_theorem(s.sm, s.chi);
        common_checks(s, rep, loc.fails, loc.rootnums);
        res.family_reports[i] = rep;
    });

    for (auto *locals : {&grid_local, &family_local}) {
        for (auto &loc : *locals) {
            res.root_numbers_checked += loc.rootnums;
            res.failures.insert(res.failures.end(), loc.fails.begin(), loc.fails.end());
        }
    }
    res.corollary_checked = grid.size() + family.size();
    for (const auto &r : res.family_reports) {
        res.family_nonempty_T += r.T_set.empty() ? 0 : 1;
    }
    return res;
}

std::vector<WeilRep> enumerate_weil_reps(int max_dim, std::int64_t k_max, const std::vector<GaussianRational> &lambdas)
{
    std::vector<WeilIrred> irreds;
    for (const auto &lam : lambdas) {
        irreds.push_back(WeilIrred::one_dim(0, lam));
        irreds.push_back(WeilIrred::one_dim(1, lam));
        for (std::int64_t k = 1; k <= k_max; ++k) {
            irreds.push_back(WeilIrred::two_dim(k, lam));
        }
    }
    std::sort(irreds.begin(), irreds.end());
    std::vector<WeilRep> out;
    std::vector<WeilIrred> cur;
    // Multisets as nondecreasing index sequences.
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int dim) {
        out.emplace_back(cur);
        for (std::size_t i = from; i < irreds.size(); ++i) {
            if (dim + irreds[i].dim() > max_dim) {
                continue;
            }
            cur.push_back(irreds[i]);
            rec(i, dim + irreds[i].dim());
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

nlohmann::ordered_json to_json(const SweepResult &r)
{
    nlohmann::ordered_json j;
    j["esi_points"] = r.esi_points;
    j["family_size"] = r.family_size;
    j["family_nonempty_T"] = r.family_nonempty_T;
    j["root_numbers_checked"] = r.root_numbers_checked;
    j["corollary_checked"] = r.corollary_checked;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto &f : r.failures) {
        j["failures"].push_back(
            {{"check", f.check}, {"D", f.D}, {"blocks", f.blocks}, {"chi", f.chi}, {"detail", f.detail}});
    }
    j["ok"] = r.ok();
    return j;
}

} // namespace weilptb
