#include "sphcox/poly.hpp"

#include <algorithm>

#include "sphcox/errors.hpp"

namespace sphcox {

char kind_letter(VarKind k) {
    switch (k) {
        case VarKind::S: return 'S';
        case VarKind::T: return 'T';
        case VarKind::W: return 'W';
        case VarKind::Z: return 'Z';
        case VarKind::X: return 'X';
    }
    return '?';
}

std::optional<VarKind> kind_from_letter(char c) {
    switch (c) {
        case 'S': return VarKind::S;
        case 'T': return VarKind::T;
        case 'W': return VarKind::W;
        case 'Z': return VarKind::Z;
        case 'X': return VarKind::X;
    }
    return std::nullopt;
}

std::string Var::name() const {
    std::string s(1, kind_letter(kind));
    s += "[" + std::to_string(i);
    if (two_index) s += "," + std::to_string(j);
    return s + "]";
}

VarTable::VarTable(std::vector<Var> vars) : vars_(std::move(vars)) {
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        if (vars_[k].i < 1 || (vars_[k].two_index && vars_[k].j < 1))
            throw InputError("variable indices must be positive: " + vars_[k].name());
        if (!index_.emplace(vars_[k], k).second)
            throw InputError("duplicate variable in table: " + vars_[k].name());
    }
}

std::optional<std::size_t> VarTable::find(const Var& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string VarTable::joined_names() const {
    std::string s;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        if (k) s += ", ";
        s += vars_[k].name();
    }
    return s;
}

namespace {

void check_same_table(const LaurentPoly& a, const LaurentPoly& b) {
    if (!a.table() || !b.table()) throw InputError("polynomial without variable table");
    if (a.table() != b.table() && !(*a.table() == *b.table()))
        throw InputError("polynomial operation across different variable tables");
}

} // namespace

LaurentPoly LaurentPoly::constant(VarTablePtr table, const Rat& c) {
    LaurentPoly p(std::move(table));
    p.add_term(Vec(p.table_->size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(VarTablePtr table, const Vec& exps, const Rat& c) {
    LaurentPoly p(std::move(table));
    if (exps.size() != p.table_->size())
        throw InputError("monomial exponent vector does not match variable table");
    p.add_term(exps, c);
    return p;
}

void LaurentPoly::add_term(const Vec& exps, const Rat& c) {
    if (exps.size() != table_->size())
        throw InputError("exponent vector does not match variable table");
    Rat cc = c;
    cc.canonicalize();  // mpq arithmetic assumes reduced form; callers may pass 4/2
    if (cc == 0) return;
    auto [it, fresh] = terms_.emplace(exps, cc);
    if (!fresh) {
        it->second += cc;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(table_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same_table(*this, o);
    LaurentPoly p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_same_table(*this, o);
    LaurentPoly p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
    return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_table(*this, o);
    LaurentPoly p(table_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) p.add_term(add_vec(ea, eb), ca * cb);
    return p;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    check_same_table(*this, o);
    return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e == 0) return constant(table_, 1);
    if (e < 0) {
        if (terms_.size() != 1)
            throw InputError("negative power of a polynomial with several terms");
        const auto& [exps, c] = *terms_.begin();
        if (c != 1 && c != -1)
            throw InputError("negative power of a non-unit coefficient");
        Vec inv(exps.size());
        for (std::size_t k = 0; k < exps.size(); ++k) inv[k] = exps[k] * e;
        Rat cc = (e % 2 == 0) ? Rat(1) : c;
        return monomial(table_, inv, cc);
    }
    LaurentPoly acc = constant(table_, 1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) > 0 ? base * base : base;
    }
    return acc;
}

LaurentPoly LaurentPoly::remapped(VarTablePtr new_table,
                                  const std::vector<std::size_t>& index_map) const {
    if (index_map.size() != table_->size())
        throw InputError("remap: index map size mismatch");
    LaurentPoly p(new_table);
    const std::size_t npos = static_cast<std::size_t>(-1);
    for (const auto& [e, c] : terms_) {
        Vec ne(new_table->size(), 0);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (index_map[k] == npos)
                throw InputError("remap: dropped variable " + table_->at(k).name() +
                                 " occurs with nonzero exponent");
            ne[index_map[k]] = e[k];
        }
        p.add_term(ne, c);
    }
    return p;
}

LaurentPoly LaurentPoly::collapse_to_one(VarTablePtr new_table,
                                         const std::vector<bool>& drop) const {
    if (drop.size() != table_->size())
        throw InputError("collapse: drop mask size mismatch");
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < drop.size(); ++k)
        if (!drop[k]) kept.push_back(k);
    if (kept.size() != new_table->size())
        throw InputError("collapse: target table size mismatch");
    for (std::size_t k = 0; k < kept.size(); ++k)
        if (!(table_->at(kept[k]) == new_table->at(k)))
            throw InputError("collapse: target table variable mismatch");
    LaurentPoly p(new_table);
    for (const auto& [e, c] : terms_) {
        Vec ne(kept.size());
        for (std::size_t k = 0; k < kept.size(); ++k) ne[k] = e[kept[k]];
        p.add_term(ne, c);
    }
    return p;
}

Int weighted_degree(const VarTable& table, const Vec& exps) {
    Int d = 0;
    for (std::size_t k = 0; k < exps.size(); ++k)
        if (table.at(k).kind != VarKind::W) d += exps[k];
    return d;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Vec, Rat>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    const VarTable& tab = *table_;
    std::sort(order.begin(), order.end(), [&tab](const auto* a, const auto* b) {
        Int da = weighted_degree(tab, a->first), db = weighted_degree(tab, b->first);
        if (da != db) return da > db;
        return lex_less(b->first, a->first);  // descending lex
    });
    std::string s;
    for (std::size_t t = 0; t < order.size(); ++t) {
        const Vec& e = order[t]->first;
        Rat c = order[t]->second;
        bool negative = c < 0;
        if (t == 0) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        Rat mag = negative ? Rat(-c) : c;
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += tab.at(k).name();
            if (e[k] != 1) mono += "^" + e[k].get_str();
        }
        if (mono.empty()) {
            s += mag.get_str();
        } else if (mag == 1) {
            s += mono;
        } else {
            s += mag.get_str() + "*" + mono;
        }
    }
    return s;
}

} // namespace sphcox
