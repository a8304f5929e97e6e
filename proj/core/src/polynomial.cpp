#include "germlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace germlab {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

Polynomial Polynomial::constant(std::vector<std::string> vars, const Rational& c) {
    Polynomial p(std::move(vars));
    if (c != 0)
        p.terms_[Exponents(p.vars_.size(), 0)] = c;
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, const std::string& name) {
    Polynomial p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.terms_[e] = 1;
    return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, Exponents e, const Rational& c) {
    Polynomial p(std::move(vars));
    if (e.size() != p.vars_.size())
        throw std::invalid_argument("monomial: exponent length mismatch");
    if (c != 0)
        p.terms_[std::move(e)] = c;
    return p;
}

int Polynomial::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return static_cast<int>(i);
    throw std::invalid_argument("unknown variable: " + name);
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, total_degree(e));
    return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size())
        throw std::invalid_argument("add_term: exponent length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0)
            terms_[e] = c;
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_)
        r.terms_[e] = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("polynomial rings differ in +");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("polynomial rings differ in *");
    Polynomial r(vars_);
    Exponents e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(vars_);
    if (c == 0)
        return r;
    for (const auto& [e, k] : terms_)
        r.terms_[e] = k * c;
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::pow(int n) const {
    if (n < 0)
        throw std::invalid_argument("negative power");
    Polynomial r = Polynomial::constant(vars_, 1);
    for (int i = 0; i < n; ++i)
        r = r * (*this);
    return r;
}

Polynomial Polynomial::derivative(const std::string& var) const {
    int idx = var_index(var);
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0)
            continue;
        Exponents f = e;
        f[idx] -= 1;
        r.add_term(f, c * e[idx]);
    }
    return r;
}

Polynomial Polynomial::in_ring(const std::vector<std::string>& new_vars) const {
    std::vector<int> where(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        if (it != new_vars.end())
            where[i] = static_cast<int>(it - new_vars.begin());
    }
    Polynomial r(new_vars);
    for (const auto& [e, c] : terms_) {
        Exponents f(new_vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (where[i] < 0)
                throw std::invalid_argument("in_ring: variable " + vars_[i] +
                                            " missing from target ring");
            f[where[i]] = e[i];
        }
        r.add_term(f, c);
    }
    return r;
}

Polynomial Polynomial::rename(const std::map<std::string, std::string>& renaming,
                              const std::vector<std::string>& new_vars) const {
    Polynomial r(new_vars);
    std::vector<int> where(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = renaming.find(vars_[i]);
        const std::string& target = it == renaming.end() ? vars_[i] : it->second;
        auto jt = std::find(new_vars.begin(), new_vars.end(), target);
        if (jt != new_vars.end())
            where[i] = static_cast<int>(jt - new_vars.begin());
    }
    for (const auto& [e, c] : terms_) {
        Exponents f(new_vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (where[i] < 0)
                throw std::invalid_argument("rename: no image for variable " + vars_[i]);
            f[where[i]] += e[i];
        }
        r.add_term(f, c);
    }
    return r;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images) const {
    if (images.empty())
        return *this;
    const std::vector<std::string>& target = images.begin()->second.vars();
    std::vector<const Polynomial*> img(vars_.size(), nullptr);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = images.find(vars_[i]);
        if (it != images.end()) {
            if (it->second.vars() != target)
                throw std::invalid_argument("substitute: image rings differ");
            img[i] = &it->second;
        }
    }
    Polynomial result(target);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            Polynomial base = img[i] ? *img[i] : Polynomial::variable(target, vars_[i]);
            term = term * base.pow(e[i]);
        }
        result = result + term;
    }
    return result;
}

Rational Polynomial::eval_at_origin() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::uses_var(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        return false;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    for (const auto& [e, c] : terms_)
        if (e[idx] != 0)
            return true;
    return false;
}

std::vector<Polynomial> Polynomial::coefficients_in(const std::string& var) const {
    int idx = var_index(var);
    int top = 0;
    for (const auto& [e, c] : terms_)
        top = std::max(top, e[idx]);
    std::vector<Polynomial> coeffs(static_cast<size_t>(top) + 1, Polynomial(vars_));
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        int j = f[idx];
        f[idx] = 0;
        coeffs[j].add_term(f, c);
    }
    return coeffs;
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    // Deterministic print order: total degree descending, then reverse key order.
    std::vector<const std::pair<const Exponents, Rational>*> ts;
    for (const auto& t : terms_)
        ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [](const auto* a, const auto* b) {
        int da = total_degree(a->first), db = total_degree(b->first);
        if (da != db)
            return da > db;
        return a->first > b->first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : ts) {
        const auto& [e, c] = *t;
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        bool has_vars = total_degree(e) > 0;
        if (!has_vars || a != 1)
            out << a.get_str();
        bool printed = !has_vars || a != 1;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (printed)
                out << "*";
            out << vars_[i];
            if (e[i] > 1)
                out << "^" << e[i];
            printed = true;
        }
    }
    return out.str();
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool at_ident() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos)
            throw std::invalid_argument("expected identifier at position " +
                                        std::to_string(start) + " in: " + s);
        return s.substr(start, pos - start);
    }
    std::string integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            throw std::invalid_argument("expected integer at position " +
                                        std::to_string(start) + " in: " + s);
        return s.substr(start, pos - start);
    }
};

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*'? factor)*
// factor := rational | ident ('^' int)? | '(' expr ')' ('^' int)?
struct Parser {
    Lexer lx;
    const std::vector<std::string>& vars;

    Parser(const std::string& text, const std::vector<std::string>& v) : lx(text), vars(v) {}

    Polynomial expr() {
        Polynomial acc(vars);
        bool first = true;
        while (true) {
            int sign = 1;
            bool saw_sign = false;
            while (true) {
                if (lx.eat('-')) {
                    sign = -sign;
                    saw_sign = true;
                } else if (lx.eat('+')) {
                    saw_sign = true;
                } else {
                    break;
                }
            }
            if (!first && !saw_sign)
                break;
            first = false;
            Polynomial t = term();
            acc = sign > 0 ? acc + t : acc - t;
            if (lx.peek() == '\0' || lx.peek() == ')')
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            lx.eat('*');
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c)) || lx.at_ident() || c == '(') {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lx.integer();
            Rational r = lx.eat('/') ? rational_from_string(num + "/" + lx.integer())
                                     : rational_from_string(num);
            return Polynomial::constant(vars, r);
        }
        if (lx.at_ident()) {
            std::string name = lx.ident();
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end())
                throw std::invalid_argument("unknown variable in polynomial: " + name);
            Polynomial v = Polynomial::variable(vars, name);
            if (lx.eat('^'))
                return v.pow(std::stoi(lx.integer()));
            return v;
        }
        if (lx.eat('(')) {
            Polynomial inner = expr();
            if (!lx.eat(')'))
                throw std::invalid_argument("missing ')' in polynomial: " + lx.s);
            if (lx.eat('^'))
                return inner.pow(std::stoi(lx.integer()));
            return inner;
        }
        throw std::invalid_argument("unexpected input at position " + std::to_string(lx.pos) +
                                    " in polynomial: " + lx.s);
    }
};

void scan_identifiers(const std::string& text, std::vector<std::string>& order) {
    Lexer lx(text);
    while (lx.peek() != '\0') {
        if (lx.at_ident()) {
            std::string name = lx.ident();
            if (std::find(order.begin(), order.end(), name) == order.end())
                order.push_back(name);
        } else {
            ++lx.pos;
        }
    }
}

} // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    Parser p(text, vars);
    Polynomial r = p.expr();
    p.lx.skip_ws();
    if (p.lx.pos != text.size())
        throw std::invalid_argument("trailing input at position " + std::to_string(p.lx.pos) +
                                    " in polynomial: " + text);
    return r;
}

Polynomial parse_polynomial(const std::string& text) {
    std::vector<std::string> vars;
    scan_identifiers(text, vars);
    return parse_polynomial(text, vars);
}

Polynomial divide_by_linear_difference(const Polynomial& h, const std::string& u,
                                       const std::string& v) {
    const auto& vars = h.vars();
    Polynomial vpoly = Polynomial::variable(vars, v);
    Polynomial at_diag = h.substitute({{u, vpoly}});
    if (!at_diag.is_zero())
        throw std::invalid_argument("divide_by_linear_difference: not divisible by " + u +
                                    " - " + v);
    // h = sum_j a_j(v, rest) u^j with h|_{u=v} = 0, so
    // h = (u - v) * sum_j a_j * (u^{j-1} + u^{j-2} v + ... + v^{j-1}).
    std::vector<Polynomial> coeffs = h.coefficients_in(u);
    Polynomial upoly = Polynomial::variable(vars, u);
    Polynomial q(vars);
    for (size_t j = 1; j < coeffs.size(); ++j) {
        Polynomial geom(vars);
        for (size_t a = 0; a < j; ++a)
            geom = geom + upoly.pow(static_cast<int>(a)) * vpoly.pow(static_cast<int>(j - 1 - a));
        q = q + coeffs[j] * geom;
    }
    return q;
}

} // namespace germlab
