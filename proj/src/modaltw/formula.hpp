#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace modaltw {

enum class FormulaKind { Var, Bottom, Not, Or, And, Dia, Box };

/// Modal formula syntax tree. `kids` holds one child for Not/Dia/Box and
/// two for Or/And; `var` is set for Var nodes only.
struct ModalFormula {
    FormulaKind kind = FormulaKind::Bottom;
    std::string var;
    std::vector<ModalFormula> kids;

    static ModalFormula mk_var(std::string name);
    static ModalFormula bottom();
    static ModalFormula mk_not(ModalFormula f);
    static ModalFormula mk_or(ModalFormula a, ModalFormula b);
    static ModalFormula mk_and(ModalFormula a, ModalFormula b);
    static ModalFormula mk_dia(ModalFormula f);
    static ModalFormula mk_box(ModalFormula f);

    bool operator==(ModalFormula const& o) const;
};

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(std::string msg, int line, int col)
        : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line), col(col) {}
};

/// Grammar: `false`, identifiers, prefix `~` `[]` `<>`, infix `&` over `|`,
/// parentheses. Prefix binds tightest, `&` tighter than `|`, both
/// left-associative.
ModalFormula parse_formula(std::string const& text);

/// Renders with minimal parentheses; render(parse(render(f))) == render(f).
std::string render(ModalFormula const& f);

int modal_depth(ModalFormula const& f);

/// Variables in first-occurrence order (preorder), deduplicated.
std::vector<std::string> variables_of(ModalFormula const& f);

} // namespace modaltw
