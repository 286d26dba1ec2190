#ifndef WEAVE_FORMATS_HPP
#define WEAVE_FORMATS_HPP

#include <map>
#include <optional>
#include <string>

#include "weave/matrix.hpp"

namespace weave {

/// A diagram plus an optional label and free-form metadata. Round-trips
/// bit-exactly through the JSON document format; the plain text format
/// carries the matrix alone.
struct WeaveDocument {
    CrossingMatrix matrix;
    std::optional<std::string> name;
    std::map<std::string, std::string> metadata;

    friend bool operator==(const WeaveDocument&, const WeaveDocument&) = default;
};

WeaveDocument parse_text(std::string_view text);
std::string serialize_text(const WeaveDocument& doc);

/// JSON document: {"format":"weave/1","m":..,"n":..,"rows":[..],"name"?,"metadata"?}.
std::string to_json(const WeaveDocument& doc, int indent = -1);
WeaveDocument from_json(const std::string& json);

/// Plain weave: alternating checkerboard, c(i,j) = (i + j) mod 2.
/// Both dimensions must be even for the pattern to close up on the torus.
WeaveDocument plain(int m, int n);

/// Twill: diagonal ribs with `over` raised then `under` lowered crossings
/// per period; c(i,j) = 1 iff (j - i) mod (over+under) < over. The period
/// must divide n, and m must be a multiple of the period.
WeaveDocument twill(int m, int n, int over, int under);

/// Satin: an n x n permutation pattern, warp i raised over weft (step * i
/// mod n) only. Requires n >= 5, gcd(step, n) = 1, and step not congruent
/// to +-1 mod n, so the raised crossings never touch diagonally.
WeaveDocument satin(int n, int step);

enum class RenderStyle { Ascii, Svg };

/// Ascii: '#' for a raised crossing, '.' for a lowered one, one row per
/// warp. Svg: an m x n grid of filled/unfilled unit squares in a frame.
/// Output bytes are deterministic for fixed input.
std::string render(const WeaveDocument& doc, RenderStyle style);

}  // namespace weave

#endif  // WEAVE_FORMATS_HPP
