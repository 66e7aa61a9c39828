#include <weilptb/report.hpp>

#include <weilptb/error.hpp>

namespace weilptb {

namespace {

using ojson = nlohmann::ordered_json;

template <typename T>
ojson entries(const Matrix<T> &m)
{
    ojson rows = ojson::array();
    for (std::size_t p = 0; p < m.rows(); ++p) {
        ojson row = ojson::array();
        for (std::size_t q = 0; q < m.cols(); ++q) {
            row.push_back(to_string(m(p, q)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ojson rationals(const std::vector<Rational> &v)
{
    ojson out = ojson::array();
    for (const auto &x : v) {
        out.push_back(to_string(x));
    }
    return out;
}

} // namespace

ojson to_json(const DistinctionReport &r)
{
    ojson j;
    j["D"] = to_string(r.sm.D());
    j["blocks"] = to_string(r.sm);
    j["chi"] = {{"l", r.chi.l}, {"eta", to_string(r.chi.eta)}};
    ojson T = ojson::array();
    for (const auto &s : r.T_set) {
        T.push_back(to_string(s));
    }
    j["T"] = std::move(T);
    j["bound"] = r.hom_upper_bound;
    j["gsp_ok"] = r.gsp_ok;
    j["eps_lhs"] = r.epsilon_lhs ? ojson(to_string(*r.epsilon_lhs)) : ojson(nullptr);
    j["eps_rhs"] = r.epsilon_rhs ? ojson(*r.epsilon_rhs) : ojson(nullptr);
    j["identity_ok"] = r.identity_ok ? ojson(*r.identity_ok) : ojson(nullptr);
    j["abc"] = r.abc.empty() ? ojson(nullptr) : ojson::array({r.abc[0].a, r.abc[0].b, r.abc[0].c});
    ojson all = ojson::array();
    for (std::size_t i = 0; i < r.abc.size(); ++i) {
        const Abc &x = r.abc[i];
        all.push_back({{"involution", to_string(r.T_set[i])},
                       {"abc", {x.a, x.b, x.c}},
                       {"prediction", x.prediction}});
    }
    j["abc_all"] = std::move(all);
    j["violations"] = r.violations;
    return j;
}

ojson to_json(const ExactMatrix &m)
{
    ojson j;
    j["scalar"] = scalar_tag(m);
    j["entries"] = std::visit([](const auto &x) { return entries(x); }, m);
    return j;
}

ojson orbits_json(const PartitionSpec &spec, const OrbitReportOptions &opts)
{
    const auto J = enumerate_J(spec);
    ojson j;
    j["D"] = to_string(spec.D);
    j["partition"] = spec.parts;
    j["count"] = J.size();
    ojson list = ojson::array();
    for (const auto &S : J) {
        ojson o;
        o["S"] = S.S;
        const auto mono = is_monomial(S);
        o["monomial"] = mono.has_value();
        o["involution"] = mono ? ojson(to_string(*mono)) : ojson(nullptr);
        o["g_S"] = to_json(representative_gS(S));
        o["u"] = to_json(sigma_S_conjugator(S));
        o["levi_stable"] = levi_stable(S);
        if (mono) {
            const BlockMap bm = block_map(S);
            ojson blocks = ojson::array();
            for (std::size_t i = 0; i < bm.blocks.size(); ++i) {
                const BlockImage &b = bm.blocks[i];
                ojson bj;
                bj["block"] = i + 1;
                bj["target"] = b.target + 1;
                bj["conjugator"] = to_json(b.conjugator);
                bj["stated_form"] = b.stated_form;
                bj["matches_stated"] = b.matches_stated;
                bj["fixed_dim"] = b.fixed_dim ? ojson(*b.fixed_dim) : ojson(nullptr);
                const int ii = static_cast<int>(i);
                bj["chi_composite"] = bm.varsigma(ii) >= ii ? ojson(chi_composite_check(S, ii)) : ojson(nullptr);
                blocks.push_back(std::move(bj));
            }
            o["block_map"] = std::move(blocks);
        }
        if (opts.witness) {
            const RootDatum rd = root_datum(S);
            ojson xi = ojson::array();
            for (const auto &a : rd.xi()) {
                xi.push_back(a);
            }
            ojson wj;
            wj["xi"] = std::move(xi);
            const auto w = find_positive_witness(rd);
            if (w) {
                wj["X"] = rationals(w->X);
                wj["coefficients"] = rationals(w->coefficients);
                wj["ok"] = witness_ok(rd, w->X);
            } else {
                wj["X"] = nullptr;
            }
            o["witness"] = std::move(wj);
        }
        list.push_back(std::move(o));
    }
    j["orbits"] = std::move(list);
    return j;
}

std::string csv_header()
{
    return "D,n,blocks,chi_l,chi_eta,T_size,gsp_ok,eps_lhs,eps_rhs,identity_ok";
}

std::string csv_row(const DistinctionReport &r)
{
    auto boolean = [](bool b) { return std::string(b ? "true" : "false"); };
    std::string out = to_string(r.sm.D());
    out += "," + std::to_string(r.sm.n());
    out += "," + to_string(r.sm);
    out += "," + std::to_string(r.chi.l);
    out += "," + to_string(r.chi.eta);
    out += "," + std::to_string(r.T_set.size());
    out += "," + boolean(r.gsp_ok);
    out += "," + (r.epsilon_lhs ? to_string(*r.epsilon_lhs) : std::string());
    out += "," + (r.epsilon_rhs ? std::to_string(*r.epsilon_rhs) : std::string());
    out += "," + (r.identity_ok ? boolean(*r.identity_ok) : std::string());
    return out;
}

std::string to_csv(const std::vector<DistinctionReport> &reports)
{
    std::string out = csv_header() + "\n";
    for (const auto &r : reports) {
        out += csv_row(r) + "\n";
    }
    return out;
}

} // namespace weilptb
