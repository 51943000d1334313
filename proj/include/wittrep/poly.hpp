#pragma once

// Sparse multivariate polynomials over any CommutativeRing. A polynomial is
// itself a CommutativeRing, so polynomials over polynomials and over dual
// numbers use the same code.

#include "wittrep/ring.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace wittrep {

using Exponents = std::vector<std::uint32_t>;
using Vars = std::shared_ptr<const std::vector<std::string>>;

Vars make_vars(std::vector<std::string> names);

/// Graded-lex, larger first: higher total degree precedes lower, ties are
/// broken lexicographically with the first variable most significant.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const noexcept {
        std::uint64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        return b < a;
    }
};

std::string monomial_text(const std::vector<std::string>& names, const Exponents& e);

// Coefficient rendering for the canonical text form.
std::string coefficient_text(const Fq& c);
std::string coefficient_text(const ZmodM& c);

template <CommutativeRing R>
class MultiPoly;

template <CommutativeRing R>
std::string coefficient_text(const DualNumber<R>& c) {
    return "(" + coefficient_text(c.real()) + " + " + coefficient_text(c.eps()) + "*eps)";
}

template <CommutativeRing R>
std::string coefficient_text(const MultiPoly<R>& c) {
    return "(" + c.to_string() + ")";
}

template <CommutativeRing R>
class MultiPoly {
public:
    using TermMap = std::map<Exponents, R, GradedLexGreater>;

    MultiPoly() = default;
    /// The zero polynomial; proto fixes the coefficient context.
    MultiPoly(Vars vars, const R& proto) : vars_(std::move(vars)), proto_(proto.zero_like()) {}

    static MultiPoly constant(Vars vars, const R& c) {
        MultiPoly out(std::move(vars), c);
        out.add_term(Exponents(out.nvars(), 0), c);
        return out;
    }

    static MultiPoly monomial(Vars vars, const R& c, Exponents e) {
        MultiPoly out(std::move(vars), c);
        out.add_term(e, c);
        return out;
    }

    static MultiPoly variable(Vars vars, const R& proto, std::size_t index) {
        Exponents e(vars->size(), 0);
        e.at(index) = 1;
        return monomial(std::move(vars), proto.one_like(), std::move(e));
    }

    static MultiPoly variable(const Vars& vars, const R& proto, const std::string& name) {
        for (std::size_t i = 0; i < vars->size(); ++i)
            if ((*vars)[i] == name) return variable(vars, proto, i);
        throw Error(ErrorKind::UnboundVariable, "no variable named " + name);
    }

    const Vars& vars() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_ ? vars_->size() : 0; }
    const TermMap& terms() const noexcept { return terms_; }
    const R& proto() const noexcept { return proto_; }

    R coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? proto_ : it->second;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_exponent(terms_.begin()->first));
    }
    R constant_term() const { return coefficient(Exponents(nvars(), 0)); }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [e, c] : terms_) {
            std::uint64_t s = 0;
            for (auto x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }

    MultiPoly operator-() const {
        MultiPoly out(vars_, proto_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly out(vars_, proto_);
        Exponents e(nvars());
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    MultiPoly scale(const R& c) const {
        MultiPoly out(vars_, proto_);
        for (const auto& [e, a] : terms_) out.add_term(e, a * c);
        return out;
    }

    bool operator==(const MultiPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto it = o.terms_.begin();
        for (const auto& [e, c] : terms_) {
            if (e != it->first || !(c == it->second)) return false;
            ++it;
        }
        return true;
    }

    MultiPoly zero_like() const { return MultiPoly(vars_, proto_); }
    MultiPoly one_like() const { return constant(vars_, proto_.one_like()); }
    MultiPoly from_int(std::int64_t n) const { return constant(vars_, proto_.from_int(n)); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::uint64_t characteristic() const { return proto_.characteristic(); }

    bool is_unit() const
        requires UnitTestableRing<R>
    {
        return is_constant() && !terms_.empty() && terms_.begin()->second.is_unit();
    }
    MultiPoly inverse() const
        requires UnitTestableRing<R>
    {
        if (!is_unit()) throw Error(ErrorKind::NotUnit, "only unit constants are invertible: " + to_string());
        return constant(vars_, terms_.begin()->second.inverse());
    }

    /// Evaluates at a point given in variable order.
    R evaluate(std::span<const R> point) const {
        if (point.size() != nvars()) throw Error(ErrorKind::InvalidArgument, "evaluation point has wrong arity");
        R acc = proto_;
        for (const auto& [e, c] : terms_) {
            R term = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) term = term * power(point[i], e[i]);
            acc = acc + term;
        }
        return acc;
    }

    /// Canonical text form: graded-lex terms, larger first, e.g. "2*u0^2*v0 + u1".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            const std::string mono = monomial_text(*vars_, e);
            if (mono.empty()) {
                os << coefficient_text(c);
            } else if (c == c.one_like()) {
                os << mono;
            } else {
                os << coefficient_text(c) << "*" << mono;
            }
        }
        return os.str();
    }

    void add_term(const Exponents& e, const R& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    static bool is_zero_exponent(const Exponents& e) {
        for (auto x : e)
            if (x != 0) return false;
        return true;
    }

    Vars vars_;
    R proto_{};
    TermMap terms_;
};

/// Composes f with one binding per variable of f (in f's variable order); all
/// bindings must share a target variable context.
template <CommutativeRing R>
MultiPoly<R> substitute(const MultiPoly<R>& f, std::span<const MultiPoly<R>> bindings) {
    if (bindings.size() != f.nvars()) throw Error(ErrorKind::UnboundVariable, "binding count does not match arity");
    if (f.is_zero()) return bindings.empty() ? f : bindings.front().zero_like();
    // powers[i][k] = bindings[i]^k, grown on demand
    std::vector<std::vector<MultiPoly<R>>> powers(bindings.size());
    for (std::size_t i = 0; i < bindings.size(); ++i) powers[i].push_back(bindings[i].one_like());
    const auto pow_of = [&](std::size_t i, std::uint32_t k) -> const MultiPoly<R>& {
        while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * bindings[i]);
        return powers[i][k];
    };
    MultiPoly<R> acc = bindings.front().zero_like();
    for (const auto& [e, c] : f.terms()) {
        MultiPoly<R> term = acc.one_like().scale(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = term * pow_of(i, e[i]);
        acc = acc + term;
    }
    return acc;
}

/// Name-keyed substitution; every variable of f must be bound.
template <CommutativeRing R>
MultiPoly<R> substitute(const MultiPoly<R>& f, const std::map<std::string, MultiPoly<R>>& bindings) {
    std::vector<MultiPoly<R>> ordered;
    for (const auto& name : *f.vars()) {
        auto it = bindings.find(name);
        if (it == bindings.end()) throw Error(ErrorKind::UnboundVariable, "variable " + name + " is not bound");
        ordered.push_back(it->second);
    }
    return substitute(f, std::span<const MultiPoly<R>>(ordered));
}

/// Evaluation with constant bindings keyed by name.
template <CommutativeRing R>
R substitute_constants(const MultiPoly<R>& f, const std::map<std::string, R>& bindings) {
    std::vector<R> point;
    for (const auto& name : *f.vars()) {
        auto it = bindings.find(name);
        if (it == bindings.end()) throw Error(ErrorKind::UnboundVariable, "variable " + name + " is not bound");
        point.push_back(it->second);
    }
    return f.evaluate(point);
}

/// Coordinates of f in the monomial basis; NotInSpan names the first term of
/// f outside the basis.
template <CommutativeRing R>
std::vector<R> express_in_basis(const MultiPoly<R>& f, std::span<const Exponents> basis) {
    std::vector<R> out(basis.size(), f.proto());
    std::size_t matched = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto it = f.terms().find(basis[i]);
        if (it != f.terms().end()) {
            out[i] = it->second;
            ++matched;
        }
    }
    if (matched != f.terms().size()) {
        for (const auto& [e, c] : f.terms()) {
            bool found = false;
            for (const auto& b : basis) found = found || b == e;
            if (!found) {
                const std::string mono = monomial_text(*f.vars(), e);
                throw Error(ErrorKind::NotInSpan, "monomial " + (mono.empty() ? std::string("1") : mono) +
                                                      " is outside the basis span");
            }
        }
    }
    return out;
}

template <CommutativeRing R>
MultiPoly<R> from_coordinates(const Vars& vars, const R& proto, std::span<const Exponents> basis,
                              std::span<const R> coords) {
    MultiPoly<R> out(vars, proto);
    for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], coords[i]);
    return out;
}

}  // namespace wittrep
