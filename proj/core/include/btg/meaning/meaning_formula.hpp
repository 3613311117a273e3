#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "btg/kernel/operations.hpp"
#include "btg/kernel/term.hpp"
#include "btg/meaning/syntactic_class.hpp"

namespace btg::meaning {

/// Syntax-level expression: the terms a meaning formula talks about.
struct Expr {
  enum class Kind {
    Meta,       ///< syntax variable bound by the formula
    Object,     ///< fixed object term
    Call,       ///< transformer application
    Translate,  ///< renaming applied to the single argument
  };
  Kind kind = Kind::Meta;
  std::string name;
  Term term = Term::lit(0, kernel::kSyn);
  std::vector<Expr> args;
  std::shared_ptr<const kernel::Renaming> renaming;

  static Expr meta(std::string name);
  static Expr object(Term t);
  static Expr call(std::string transformer, std::vector<Expr> args);
  static Expr translate(kernel::Renaming r, Expr e);

  friend bool operator==(const Expr& a, const Expr& b);
};

/// Names a designated model; an empty theory means the formula's own theory.
struct ModelRef {
  std::string theory;
  std::string model;
  friend bool operator==(const ModelRef&, const ModelRef&) = default;
};

/// Semantic expression: denotations and operations on values.
struct SemExpr {
  enum class Kind {
    Den,      ///< denotation of `expr` in `model`
    Numeral,  ///< value of a literal `expr`
    Apply,    ///< semantic operator `op` with `params` on `args`
  };
  Kind kind = Kind::Den;
  ModelRef model;
  Expr expr;
  std::string op;
  std::vector<std::string> params;
  std::vector<SemExpr> args;

  static SemExpr den(ModelRef m, Expr e);
  static SemExpr numeral(Expr e);
  static SemExpr apply(std::string op, std::vector<std::string> params, std::vector<SemExpr> args);

  friend bool operator==(const SemExpr&, const SemExpr&) = default;
};

/// Semantic operators available to SemExpr::Apply.
const std::vector<std::string>& semantic_operators();

struct Claim {
  enum class Kind {
    Equal,  ///< lhs = rhs
    And,    ///< every part
    Holds,  ///< structural predicate on `subject`
  };
  Kind kind = Kind::Equal;
  SemExpr lhs;
  SemExpr rhs;
  std::vector<Claim> parts;
  std::string predicate;
  Expr subject;

  static Claim equal(SemExpr l, SemExpr r);
  static Claim all(std::vector<Claim> parts);
  static Claim holds(std::string predicate, Expr subject);

  friend bool operator==(const Claim&, const Claim&) = default;
};

/// Structural predicates available to Claim::Holds.
const std::vector<std::string>& predicates();

/// A meaning formula: for all syntax variables in their classes, the claim.
struct MeaningFormula {
  std::string name;
  std::string transformer;
  std::vector<std::pair<std::string, SyntacticClass>> vars;
  Claim claim;

  friend bool operator==(const MeaningFormula&, const MeaningFormula&) = default;
};

/// Transformer names a formula calls, in first-occurrence order.
std::vector<std::string> called_transformers(const MeaningFormula& mf);

/// Model references of a formula, in first-occurrence order.
std::vector<ModelRef> model_refs(const MeaningFormula& mf);

/// Checks that the claim mentions the formula's transformer and that every
/// syntax variable is bound and every operator/predicate known. Throws
/// UnknownReference.
void check_shape(const MeaningFormula& mf);

/// Sort/symbol renaming of object terms and classes, with transformer names
/// mapped by `transformers` (identity when absent). Throws NonTransportable
/// for formulas containing explicit translations.
MeaningFormula translate_meaning(const kernel::Renaming& r, const std::map<std::string, std::string>& transformers,
                                 const MeaningFormula& mf);

std::string to_string(const Expr& e);
std::string to_string(const SemExpr& e);
std::string to_string(const Claim& c);
std::string to_string(const MeaningFormula& mf);

}  // namespace btg::meaning
