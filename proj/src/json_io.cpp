#include "hahn/json_io.hpp"

#include <stdexcept>

namespace hahn {

Json to_json(const FiniteSeries& f)
{
    Json terms = Json::array();
    for (const auto& t : f.terms())
        terms.push_back(Json::array({t.exponent.str(), t.coeff.str()}));
    return Json{{"group", f.group().selector()}, {"coeff", f.field().selector()}, {"terms", std::move(terms)}};
}

Json to_json(const ExtendedExponent& e)
{
    return to_string(e);
}

FiniteSeries series_from_json(const Json& j)
{
    const Group group = Group::parse(j.at("group").get<std::string>());
    const Field field = Field::parse(j.at("coeff").get<std::string>());
    std::vector<Term> terms;
    for (const auto& pair : j.at("terms")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("series term must be an [exponent, coefficient] pair");
        terms.push_back(Term{Exponent::parse(pair[0].get<std::string>(), group),
                             Coefficient::parse(pair[1].get<std::string>(), field)});
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coeff.is_zero())
            throw std::invalid_argument("series term with zero coefficient");
        if (i && !(terms[i - 1].exponent < terms[i].exponent))
            throw std::invalid_argument("series terms must be strictly increasing");
    }
    return FiniteSeries::from_canonical(group, field, std::move(terms));
}

} // namespace hahn
