#pragma once

#include <iosfwd>
#include <string>

#include "realdcp/even_poset.hpp"

namespace dcp::flats {

inline constexpr int kPosetCacheFormatVersion = 1;

/// Versioned JSON snapshot: type, rank, element count, flats as sorted root
/// index arrays, covers as index pairs, Moebius numbers. Deterministic bytes.
void save_poset(const EvenPoset& p, std::ostream& out);
void save_poset_file(const EvenPoset& p, const std::string& path);

/// Reload; poset ranks are recovered from the cover relations.
EvenPoset load_poset(std::istream& in);
EvenPoset load_poset_file(const std::string& path);

/// Canonical cache file name for a type, e.g. "B5.poset.json".
std::string cache_file_name(const CoxeterType& t);

}  // namespace dcp::flats
