#include "duality/catalog.hpp"

#include "duality/constructions.hpp"
#include "duality/gamma.hpp"

namespace duality {

namespace {

language_ref char_language(std::string alphabet,
                           std::function<bool(const std::string&)> member) {
  language_ref ref;
  for (char c : alphabet) ref.alphabet.push_back(std::string(1, c));
  ref.member = [member = std::move(member)](
                   const std::vector<std::string>& w) {
    std::string chars;
    for (const auto& sym : w) {
      if (sym.size() != 1) return false;
      chars += sym;
    }
    return member(chars);
  };
  return ref;
}

}  // namespace

language_ref addition_language() {
  language_ref ref;
  for (gamma_symbol v = 1; v < 8; ++v) ref.alphabet.push_back(gamma_token(v));
  ref.alphabet.push_back(".");
  ref.member = [](const std::vector<std::string>& w) {
    static const dpda p = addition_dpda();
    return dpda_run(p, w);
  };
  return ref;
}

const language_registry& default_languages() {
  static const language_registry reg = [] {
    language_registry r;
    r.add("immerman", char_language("01a", immerman_member));
    r.add("immerman-complement",
          char_language("01a", complement_decomposition_member));
    r.add("A", char_language("01a", in_A));
    r.add("modified-immerman", char_language("01a", modified_immerman_member));
    r.add("wotschke", char_language("ab", wotschke_member));
    r.add("addition", addition_language());
    return r;
  }();
  return reg;
}

}  // namespace duality
