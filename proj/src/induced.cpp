#include "stochsub/induced.hpp"

#include <string>

#include "stochsub/error.hpp"

namespace stochsub {

namespace {

class ColumnBuilder {
 public:
  ColumnBuilder(const SubstitutionRule& rule, const LanguageTable& language, std::size_t ell,
                const Guards& guards, RationalMatrix& out)
      : rule_(rule), language_(language), ell_(ell), guards_(guards), out_(out) {}

  void build(std::size_t column, const Word& u) {
    column_ = column;
    leaves_ = 0;
    for (const auto& opt : rule_.images(u[0])) {
      buffer_.assign(opt.word.begin(), opt.word.end());
      descend(u, 1, opt.word.size(), opt.prob);
    }
  }

 private:
  void descend(const Word& u, std::size_t next, std::size_t first_len, const Rational& prob) {
    if (buffer_.size() >= first_len + ell_ - 1) {
      if (++leaves_ > guards_.enumeration_limit)
        throw GuardExceeded("induced matrix column enumerates more than " +
                            std::to_string(guards_.enumeration_limit) + " realisations");
      for (std::size_t off = 0; off < first_len; ++off) {
        const Word w(std::vector<Letter>(buffer_.begin() + off, buffer_.begin() + off + ell_));
        const auto row = language_.index_of(w);
        if (!row) throw Error("induced matrix: window outside the language table");
        out_(*row, column_) += prob;
      }
      return;
    }
    // Every image is nonempty, so the l letters of u always suffice.
    const std::size_t mark = buffer_.size();
    for (const auto& opt : rule_.images(u[next])) {
      buffer_.insert(buffer_.end(), opt.word.begin(), opt.word.end());
      descend(u, next + 1, first_len, prob * opt.prob);
      buffer_.resize(mark);
    }
  }

  const SubstitutionRule& rule_;
  const LanguageTable& language_;
  std::size_t ell_;
  const Guards& guards_;
  RationalMatrix& out_;
  std::size_t column_ = 0;
  std::uint64_t leaves_ = 0;
  std::vector<Letter> buffer_;
};

}  // namespace

LabeledMatrix induced_mean_matrix(const SubstitutionRule& rule, std::size_t ell,
                                  const LanguageTable& language, const Guards& guards) {
  if (ell < 1) throw Error("induced matrix: window length must be at least 1");
  if (!is_primitive(rule).primitive)
    throw NotPrimitive("induced matrix requires a primitive rule");
  if (ell > 1 && !is_expanding(rule))
    throw NotExpanding("induced matrix for l > 1 requires an expanding rule");
  if (language.max_length() < ell)
    throw Error("language table too short for l=" + std::to_string(ell));

  LabeledMatrix out;
  out.labels = language.words(ell);
  out.values = RationalMatrix(out.labels.size());
  ColumnBuilder builder(rule, language, ell, guards, out.values);
  for (std::size_t col = 0; col < out.labels.size(); ++col) builder.build(col, out.labels[col]);
  return out;
}

LabeledMatrix induced_mean_matrix(const SubstitutionRule& rule, std::size_t ell,
                                  const Guards& guards) {
  if (ell > 1 && !is_expanding(rule))
    throw NotExpanding("induced matrix for l > 1 requires an expanding rule");
  return induced_mean_matrix(rule, ell, build_language(rule, ell, guards), guards);
}

}  // namespace stochsub
