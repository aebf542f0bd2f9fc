#include "binlen/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace binlen {

BinaryForm expand_representation(const Representation& rep) {
    std::vector<std::pair<FieldElement, LinearForm>> terms;
    for (const auto& t : rep.terms()) terms.emplace_back(t.lambda, t.form);
    auto coeffs = expand_terms(terms, rep.degree());
    auto form = to_rational_form(coeffs);
    if (!form) throw std::logic_error("expand_representation: irrational expansion");
    return *form;
}

std::vector<LinearForm> enumerate_forms(long height) {
    std::vector<std::pair<std::pair<long, Rational>, LinearForm>> keyed;
    for (long p = 0; p <= height; ++p) {
        for (long q = -height; q <= height; ++q) {
            if (p == 0 && q <= 0) continue;
            if (p == 0 && q != 1) continue;  // primitive y-form only
            if (p > 0 && std::gcd(p, std::abs(q)) != 1) continue;
            long h = std::max(p, std::abs(q));
            // slope key: q/p, with the y-form past every finite slope
            Rational slope = p == 0 ? Rational(height + 1) : Rational(q, p);
            keyed.emplace_back(std::make_pair(h, slope), LinearForm(Rational(p), Rational(q)));
        }
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first < b.first.first;
        if (a.first.second != b.first.second) return a.first.second < b.first.second;
        return LinearForm::compare(a.second, b.second) < 0;
    });
    std::vector<LinearForm> out;
    out.reserve(keyed.size());
    for (auto& [key, lf] : keyed) out.push_back(std::move(lf));
    return out;
}

std::optional<std::pair<int, Representation>> brute_force_min_length_Q(
    const BinaryForm& f, const SearchBudget& budget) {
    if (f.is_zero()) throw std::invalid_argument("brute_force_min_length_Q: zero form");
    int d = f.degree();
    int max_r = budget.max_r > 0 ? std::min(budget.max_r, d) : d;
    auto forms = enumerate_forms(budget.height);
    int n = static_cast<int>(forms.size());
    // rational power columns, computed once per candidate form
    std::vector<std::vector<Rational>> columns(n);
    for (int k = 0; k < n; ++k) {
        columns[k].resize(d + 1);
        auto pc = forms[k].power_coefficients(d);
        for (int j = 0; j <= d; ++j) {
            Rational bin(binomial(d, j));
            columns[k][j] = pc[j].rat_part() / bin;  // normalized convention
        }
    }
    std::vector<Rational> rhs = f.normalized();
    std::vector<int> pick;
    std::optional<std::pair<int, Representation>> found;
    auto try_subset = [&]() {
        int r = static_cast<int>(pick.size());
        DenseMatrix<Rational> m(d + 1, r);
        for (int k = 0; k < r; ++k)
            for (int j = 0; j <= d; ++j) m.at(j, k) = columns[pick[k]][j];
        auto sol = solve_linear(m, rhs);
        if (!sol) return false;
        std::vector<std::pair<FieldElement, LinearForm>> terms;
        for (int k = 0; k < r; ++k) {
            if ((*sol)[k].is_zero())
                return false;  // a smaller subset already covers f
            terms.emplace_back(FieldElement((*sol)[k]), forms[pick[k]]);
        }
        found = std::make_pair(
            r, Representation::make(FieldDescriptor::rationals(), terms, f));
        return true;
    };
    for (int r = 1; r <= max_r && !found; ++r) {
        if (r > n) break;
        // lexicographic r-subsets of the candidate list
        pick.assign(r, 0);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            if (try_subset()) break;
            int i = r - 1;
            while (i >= 0 && pick[i] == n - r + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return found;
}

std::vector<LinearForm> biermann_basis(int d) {
    if (d < 1) throw std::invalid_argument("biermann_basis: d must be >= 1");
    std::vector<LinearForm> forms;
    for (int i = 0; i <= d; ++i)
        forms.emplace_back(Rational(i), Rational(d - i));
    // power matrix must be nonsingular
    DenseMatrix<FieldElement> m(d + 1, d + 1);
    for (int k = 0; k <= d; ++k) {
        auto pc = forms[k].power_coefficients(d);
        for (int j = 0; j <= d; ++j) m.at(j, k) = pc[j];
    }
    auto pivots = rref_in_place(m);
    if (static_cast<int>(pivots.size()) != d + 1)
        throw std::logic_error("biermann_basis: power matrix singular");
    return forms;
}

Representation e3reps_family(const Rational& a, const Rational& b) {
    if (a == b || a == Rational(-2) * b || b == Rational(-2) * a)
        throw std::invalid_argument("e3reps_family: degenerate parameters");
    Rational scale = Rational(3) * (a - b) * (a + Rational(2) * b) * (Rational(2) * a + b);
    BinaryForm target = BinaryForm::monomial(3, 1, scale);
    std::vector<Representation::RawTerm> raw{
        {FieldElement(a + Rational(2) * b), FieldElement(a), FieldElement(Rational(1))},
        {FieldElement(-(Rational(2) * a + b)), FieldElement(b), FieldElement(Rational(1))},
        {FieldElement(a - b), FieldElement(-(a + b)), FieldElement(Rational(1))}};
    return Representation::make(FieldDescriptor::rationals(), std::move(raw),
                                std::move(target));
}

}  // namespace binlen
