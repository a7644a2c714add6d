#include "ppar/report.hpp"

namespace ppar {

namespace {

const char *kind_name(OrderKind k)
{
    return k == OrderKind::exact ? "EXACT" : "LOWER-BOUND";
}

} // namespace

nlohmann::json to_json(const BoundReport &r)
{
    nlohmann::json j;
    j["t"] = r.t;
    j["delta"] = r.delta;
    j["m_min"] = r.m_min ? nlohmann::json(*r.m_min) : nlohmann::json(nullptr);
    j["theorem_bound"] = to_fraction_string(r.theorem_bound);
    j["legacy_bound"] = r.legacy_bound.get_str();
    j["verdict"] = r.verdict;
    j["search_ceiling"] = r.search_ceiling;
    return j;
}

nlohmann::json to_json(const SturmReport &r)
{
    nlohmann::json j;
    j["ell"] = r.ell;
    j["index"] = r.index;
    auto classes = nlohmann::json::array();
    for (const auto &c : r.classes) {
        classes.push_back({
            {"gcd", c.gcd_class},
            {"order", to_fraction_string(c.order)},
            {"kind", kind_name(c.kind)},
            {"multiplicity", c.multiplicity},
            {"representative", c.representative},
        });
    }
    j["classes"] = std::move(classes);
    j["sturm_rhs"] = to_fraction_string(r.evaluation.rhs);
    j["m_bound"] = to_fraction_string(r.bound.m_bound);
    j["ord2_observed"] = r.ord2_observed ? nlohmann::json(to_fraction_string(*r.ord2_observed)) : nlohmann::json(nullptr);
    j["ok"] = r.ok;
    return j;
}

nlohmann::json to_json(const HeckeCheck &h)
{
    auto opt = [](const std::optional<std::int64_t> &v) {
        return v ? nlohmann::json(to_fraction_string(Rational(BigInt(static_cast<long>(*v))))) : nlohmann::json(nullptr);
    };
    nlohmann::json j;
    j["ell"] = h.ell;
    j["prec"] = h.prec;
    j["nonvanishing"] = h.nonvanishing;
    j["first_odd_exponent"] = opt(h.first_odd_exponent);
    j["expected_exponent"] = opt(h.expected_exponent);
    j["consistent"] = h.consistent;
    j["hecke_has_q_minus_ell"] = h.hecke_has_pole;
    j["hecke_support_in_multiples"] = h.hecke_support_in_multiples;
    return j;
}

nlohmann::json to_json(const LegacyBound &b, std::uint64_t t, std::uint64_t r)
{
    nlohmann::json j;
    j["t"] = t;
    j["r"] = r;
    j["d"] = b.d;
    j["j"] = b.j;
    j["legacy_bound"] = b.value.get_str();
    j["exact"] = to_fraction_string(b.exact);
    return j;
}

std::string to_csv_row(const BoundReport &r)
{
    return std::to_string(r.t) + "," + std::to_string(r.delta) + "," + (r.m_min ? std::to_string(*r.m_min) : "NOT-FOUND") + ","
        + to_fraction_string(r.theorem_bound) + "," + r.legacy_bound.get_str() + "," + (r.verdict ? "true" : "false") + ","
        + std::to_string(r.search_ceiling);
}

} // namespace ppar
