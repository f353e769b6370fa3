#include "schublas/expansion.hpp"

#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "schublas/bases.hpp"
#include "schublas/errors.hpp"
#include "schublas/limits.hpp"

namespace schublas {

bool InvcodeGreater::operator()(const Permutation& a, const Permutation& b) const {
  return tail_lex_compare(invcode(a), invcode(b)) > 0;
}

namespace {

// Greedy peeling: match the remainder's leading exponent with the unique
// basis element sharing it, subtract, repeat.  Each pass must strictly
// lower the leading exponent in tail-lex order.
template <typename Expansion, typename IndexOf, typename BasisOf>
Expansion peel(const Polynomial& f, IndexOf index_of, BasisOf basis_of) {
  Expansion result;
  Polynomial rest = f;
  long long steps = 0;
  while (!rest.is_zero()) {
    limits::check_step_count(static_cast<std::size_t>(++steps), "expansion");
    WeakComposition lead = rest.leading_exponent();
    Rational coeff = rest.leading_coeff();
    auto index = index_of(lead);
    rest -= basis_of(index).scaled(coeff);
    if (!rest.is_zero() && !TailLexGreater{}(lead, rest.leading_exponent()))
      fail(ErrorKind::Internal, "expansion step did not lower the leading term");
    result[std::move(index)] += coeff;
  }
  for (auto it = result.begin(); it != result.end();)
    it = (it->second == 0) ? result.erase(it) : std::next(it);
  return result;
}

}  // namespace

SchubertExpansion expand_in_schubert(const Polynomial& f) {
  return peel<SchubertExpansion>(
      f, [](const WeakComposition& e) { return code_to_perm(e); },
      [](const Permutation& w) { return schubert_polynomial(w); });
}

CompositionExpansion expand_in_key(const Polynomial& f) {
  return peel<CompositionExpansion>(
      f, [](const WeakComposition& e) { return e; },
      [](const WeakComposition& a) { return key_polynomial(a); });
}

CompositionExpansion expand_in_top_lascoux(const Polynomial& f) {
  return peel<CompositionExpansion>(
      f,
      [](const WeakComposition& e) {
        try {
          return rajcode_inverse(e);
        } catch (const SchubError& err) {
          if (err.kind() == ErrorKind::NotInImage)
            fail(ErrorKind::NotInSpan,
                 "leading exponent " + e.str() + " is no rajcode");
          throw;
        }
      },
      [](const WeakComposition& a) { return top_lascoux_polynomial(a); });
}

Polynomial combine_schubert(const SchubertExpansion& e) {
  Polynomial f;
  for (const auto& [w, c] : e) f += schubert_polynomial(w).scaled(c);
  return f;
}

Polynomial combine_key(const CompositionExpansion& e) {
  Polynomial f;
  for (const auto& [a, c] : e) f += key_polynomial(a).scaled(c);
  return f;
}

Polynomial combine_top_lascoux(const CompositionExpansion& e) {
  Polynomial f;
  for (const auto& [a, c] : e) f += top_lascoux_polynomial(a).scaled(c);
  return f;
}

SchubertExpansion schubert_product_expansion(const Permutation& u,
                                             const Permutation& v) {
  return expand_in_schubert(schubert_polynomial(u) * schubert_polynomial(v));
}

Rational littlewood_richardson_coeff(const Permutation& u, const Permutation& v,
                                     const Permutation& w) {
  SchubertExpansion e = schubert_product_expansion(u, v);
  auto it = e.find(w);
  return it == e.end() ? Rational(0) : it->second;
}

CompositionExpansion top_lascoux_product_expansion(const WeakComposition& alpha,
                                                   const WeakComposition& gamma) {
  return expand_in_top_lascoux(top_lascoux_polynomial(alpha) *
                               top_lascoux_polynomial(gamma));
}

Rational top_lascoux_structure_constant(const WeakComposition& alpha,
                                        const WeakComposition& gamma,
                                        const WeakComposition& delta, int m1, int m2,
                                        int n) {
  Permutation u = standardize(alpha, m1, n);
  Permutation v = standardize(gamma, m2, n);
  Permutation w = standardize(delta, m1 + m2, n);
  return littlewood_richardson_coeff(u, v, w);
}

StructureReport top_lascoux_structure_report(const WeakComposition& alpha,
                                             const WeakComposition& gamma, int m1,
                                             int m2, int n) {
  StructureReport report;
  report.u = standardize(alpha, m1, n);
  report.v = standardize(gamma, m2, n);

  CompositionExpansion d_side = top_lascoux_product_expansion(alpha, gamma);
  SchubertExpansion c_side = schubert_product_expansion(report.u, report.v);

  // Every index from either side, keyed by the composition.
  CompositionExpansion deltas = d_side;
  for (const auto& [w, c] : c_side) {
    (void)c;
    if (auto delta = standardize_inverse(w, m1 + m2, n)) deltas[*delta];
  }

  for (const auto& [delta, unused] : deltas) {
    (void)unused;
    StructureRow row;
    row.delta = delta;
    row.w = standardize(delta, m1 + m2, n);
    auto dit = d_side.find(delta);
    row.d = dit == d_side.end() ? Rational(0) : dit->second;
    auto cit = c_side.find(row.w);
    row.c = cit == c_side.end() ? Rational(0) : cit->second;
    row.equal = row.d == row.c;
    if (!row.equal) report.all_equal = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

CompositionExpansion key_expand_top_lascoux(const WeakComposition& alpha, int m,
                                            int n) {
  CompositionExpansion direct = expand_in_key(top_lascoux_polynomial(alpha));
  CompositionExpansion transferred;
  for (const auto& [gamma, c] : expand_in_key(schubert_polynomial(standardize(alpha, m, n))))
    transferred[reverse_complement(gamma, m, n)] += c;
  if (direct != transferred)
    fail(ErrorKind::Internal,
         "key expansions of " + alpha.str() + " disagree between routes");
  return direct;
}

namespace {

nlohmann::json terms_json(std::string_view basis,
                          const std::vector<std::pair<std::vector<int>, Rational>>& terms) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [index, coeff] : terms) {
    nlohmann::json term;
    term["index"] = index;
    term["coeff"] = rational_str(coeff);
    arr.push_back(std::move(term));
  }
  nlohmann::json root;
  root["basis"] = std::string(basis);
  root["terms"] = std::move(arr);
  return root;
}

template <typename Expansion, typename IndexWord>
std::string text_of(const Expansion& e, std::string_view label, IndexWord word) {
  if (e.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [index, coeff] : e) {
    Rational c = coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (c != 1) out << rational_str(c) << "*";
    out << label << word(index);
    first = false;
  }
  return out.str();
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string expansion_to_json(const SchubertExpansion& e) {
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  for (const auto& [w, c] : e) terms.emplace_back(w.one_line(), c);
  return terms_json("schubert", terms).dump();
}

std::string expansion_to_json(const CompositionExpansion& e, std::string_view basis) {
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  for (const auto& [a, c] : e) terms.emplace_back(a.entries(), c);
  return terms_json(basis, terms).dump();
}

std::string expansion_to_text(const SchubertExpansion& e, std::string_view label) {
  // Permutation indices in brackets, composition indices in parentheses.
  return text_of(e, label,
                 [](const Permutation& w) { return "[" + join(w.one_line()) + "]"; });
}

std::string expansion_to_text(const CompositionExpansion& e, std::string_view label) {
  return text_of(e, label,
                 [](const WeakComposition& a) { return "(" + join(a.entries()) + ")"; });
}

}  // namespace schublas
