#pragma once

#include <string>
#include <string_view>

namespace sirenless {

/// Light English suffix stripper used for topic terms and word clouds.
///
/// One rule is applied, longest suffix first: -tions/-tion -> t, -ingly,
/// -edly, -ies -> y, -ing, -ed, -ly, plural -s. At least three characters
/// must remain before the suffix (four for -ly). After -ing/-ed a doubled
/// final consonant is undoubled ("stopped" -> "stop"). Input is expected to
/// be lowercase.
std::string stem(std::string_view word);

}  // namespace sirenless
