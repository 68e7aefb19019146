#pragma once

// Expressions over the Kronecker double for the command line:
//   [P1]*[I0] - v^2*[P0]*[I0]      classes, plus wing unless suffixed by -
//   one(1,1)  tube(2)  one_tor(r)  characteristic sums
//   L(0)+ * L(0)-  T(2)-  Theta(1)+  line bundles and torsion generators
//   K(1,0)  C(1)                     K_(a,b) and C^{k/2}
//   ev(E1 F2 K1^-1)                  evaluation of a term of the quantum group
// Products need an explicit `*`. A wing sign must touch the closing bracket
// and be followed by space, `*`, `)` or the end.

#include <stdexcept>
#include <string>

#include "kronhall/hall.hpp"

namespace kronhall {

class ExprError : public std::invalid_argument {
public:
    ExprError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

DoubleElement parse_double_expr(const std::string& text, int q);

/// Reads a double element with no minus classes as [X]K_a; false otherwise.
bool as_hall_element(const DoubleElement& d, HallElement& out);

}  // namespace kronhall
