#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qgl11/report.hpp"
#include "qgl11/repr.hpp"
#include "qgl11/superalg.hpp"

namespace qgl11 {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("col " + std::to_string(pos + 1) + ": " + what), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

using Value = std::variant<Element, TensorElement>;

/// '#' binds tighter than + and - but looser than * and /, so
/// "2*E[0] # F[0] + 1 # h[1]" is a sum of two pure tensors.
Value parse_expr(std::string_view src);
Element parse_element(std::string_view src);
/// Plain elements are rejected unless they are scalars c, read as c 1 # 1.
TensorElement parse_tensor(std::string_view src);

std::string format_element(const Element& x);
std::string format_element(const TensorElement& x);
std::string format_value(const Value& v);

/// Random normal-ordered element (sum of up to `terms` monomials with
/// small Laurent coefficients).
Element random_element(std::mt19937& rng, int terms = 4);

/// "rho", "pi_a(a)" or "pi_cd(c,d)".
Representation parse_rep(const std::string& text);

struct SuiteOptions {
  std::optional<int> order;
  std::uint32_t seed = 0;
  bool koszul = true;
  Rational a = 1;
  std::vector<Chain> chains;
};

Report check_perk_schultz(int order);
Report check_specialized(int order);
Report check_intertwining(int order);
Report check_quasitriangular(int order);
Report check_pairing(int bound, int max_len, int window);
Report check_hopf(std::uint32_t seed, int samples, int bound, int order);
Report check_braid(bool koszul);
Report check_baxter(const Rational& a, const std::vector<Chain>& chains, int order);
Report check_drinfeld(int window);
Report check_currents(int order);
Report check_representations(int bound);
Report check_round_trip(std::uint32_t seed, int count);

const std::vector<std::string>& suite_names();
/// Default truncation order of a suite.
int suite_order(const std::string& name);
Report run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace qgl11
