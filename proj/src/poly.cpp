#include "wittrep/poly.hpp"

namespace wittrep {

Vars make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::string monomial_text(const std::vector<std::string>& names, const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::string coefficient_text(const Fq& c) {
    const auto digits = c.coeffs();
    bool prime_subfield = true;
    for (std::size_t i = 1; i < digits.size(); ++i) prime_subfield = prime_subfield && digits[i] == 0;
    if (prime_subfield) return std::to_string(digits.empty() ? 0U : digits[0]);
    std::string out = "[";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(digits[i]);
    }
    return out + "]";
}

std::string coefficient_text(const ZmodM& c) { return std::to_string(c.value()); }

}  // namespace wittrep
