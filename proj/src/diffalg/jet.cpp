#include "trifold/diffalg/jet.hpp"

#include <array>

namespace trifold {
namespace {

std::string primes(unsigned order) {
  if (order <= 3) return std::string(order, '\'');
  return "^(" + std::to_string(order) + ")";
}

std::string latex_primes(unsigned order) {
  if (order == 0) return "";
  if (order <= 3) {
    std::string s = "^{";
    for (unsigned i = 0; i < order; ++i) s += "\\prime";
    return s + "}";
  }
  return "^{(" + std::to_string(order) + ")}";
}

constexpr std::array<const char*, 9> kOmegaNames = {"c0", "c1", "c2", "b0", "b1", "b2", "a0", "a1", "a2"};
constexpr std::array<const char*, 9> kOmegaLatex = {"c_{0}", "c_{1}", "c_{2}", "b_{0}", "b_{1}",
                                                    "b_{2}", "a_{0}", "a_{1}", "a_{2}"};
constexpr std::array<const char*, 9> kTypeANames = {"aA4", "aA3", "aA2", "aA1", "aA0", "bA2", "bA1", "bA0", "RA"};
constexpr std::array<const char*, 9> kTypeALatex = {
    "a_{4}^{(A)}", "a_{3}^{(A)}", "a_{2}^{(A)}", "a_{1}^{(A)}", "a_{0}^{(A)}",
    "b_{2}^{(A)}", "b_{1}^{(A)}", "b_{0}^{(A)}", "R^{(A)}"};
constexpr std::array<const char*, 4> kMobiusNames = {"alpha", "beta", "gamma", "delta"};

}  // namespace

std::string Var::name() const {
  const unsigned i = index();
  switch (family()) {
    case Family::Z: return "z" + primes(order());
    case Family::W: return "w" + primes(order());
    case Family::Q: return "q";
    case Family::F: return "f" + primes(order());
    case Family::Phi: return "phi" + std::to_string(i) + primes(order());
    case Family::E: return "E" + primes(order());
    case Family::Wsup: return "W" + primes(order());
    case Family::Fsup: return "F" + primes(order());
    case Family::Inv: return "I" + std::to_string(i) + primes(order());
    case Family::Omega: return i < 9 ? kOmegaNames[i] : "omega?";
    case Family::Lambda: return "l" + std::to_string(i / 3 + 1) + std::to_string(i % 3 + 1);
    case Family::TypeA: return i < 9 ? kTypeANames[i] : "typeA?";
    case Family::Mobius: return i < 4 ? kMobiusNames[i] : "mobius?";
    case Family::Symbol: return "t" + std::to_string(i);
  }
  return "?";
}

std::string Var::latex() const {
  const unsigned i = index();
  switch (family()) {
    case Family::Z: return "z" + latex_primes(order());
    case Family::W: return "w" + latex_primes(order());
    case Family::Q: return "q";
    case Family::F: return "f" + latex_primes(order());
    case Family::Phi: return "\\varphi_{" + std::to_string(i) + "}" + latex_primes(order());
    case Family::E: return "E" + latex_primes(order());
    case Family::Wsup: return "W" + latex_primes(order());
    case Family::Fsup: return "F" + latex_primes(order());
    case Family::Inv: return "I_{" + std::to_string(i) + "}" + latex_primes(order());
    case Family::Omega: return i < 9 ? kOmegaLatex[i] : "\\omega";
    case Family::Lambda: return "\\lambda_{" + std::to_string(i / 3 + 1) + std::to_string(i % 3 + 1) + "}";
    case Family::TypeA: return i < 9 ? kTypeALatex[i] : "a";
    case Family::Mobius: return i < 4 ? std::string("\\") + kMobiusNames[i] : "\\mu";
    case Family::Symbol: return "t_{" + std::to_string(i) + "}";
  }
  return "?";
}

}  // namespace trifold
