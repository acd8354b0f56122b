#pragma once
// The named languages exposed by the CLI and available to Lindstrom
// quantifiers: immerman, immerman-complement, A, modified-immerman,
// wotschke, addition.

#include "duality/eval.hpp"

namespace duality {

// Gamma_3 language of the addition DPDA.  Alphabet ordered for Lindstrom
// use: nonempty masks ascending, padding "." last as the default letter.
language_ref addition_language();

const language_registry& default_languages();

}  // namespace duality
