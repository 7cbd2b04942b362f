#pragma once

// Text literals for group elements:
//
//   wreath  {"support": {"-1": 2, "0": -2}, "shift": 3}
//   heis    [x, y, z]
//   bs:n    {"num": 3, "den_exp": 1, "dil": -2}    ("n" optional, must match)

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "palwidth/baumslag.hpp"
#include "palwidth/core.hpp"
#include "palwidth/heisenberg.hpp"
#include "palwidth/wreath.hpp"

namespace palwidth {

namespace detail {

inline nlohmann::json parse_json(std::string_view text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what(), e.byte);
  }
}

inline std::int64_t json_int(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer", 0);
  return v.get<std::int64_t>();
}

inline std::int64_t parse_index(const std::string& key) {
  std::size_t used = 0;
  std::int64_t i = 0;
  try {
    i = std::stoll(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) throw ParseError("support index \"" + key + "\" is not a decimal integer", 0);
  return i;
}

}  // namespace detail

inline WreathElement wreath_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("wreath literal must be a JSON object", 0);
  for (const auto& [key, _] : j.items())
    if (key != "support" && key != "shift") throw ParseError("wreath literal: unexpected key \"" + key + "\"", 0);
  WreathElement g;
  if (j.contains("support")) {
    const auto& support = j.at("support");
    if (!support.is_object()) throw ParseError("wreath literal: \"support\" must be an object", 0);
    for (const auto& [key, value] : support.items()) {
      const std::int64_t n = detail::json_int(value, "support exponent");
      if (n == 0) throw ParseError("wreath literal: exponent at index " + key + " is zero", 0);
      g.tail.add(detail::parse_index(key), n);
    }
  }
  if (j.contains("shift")) g.shift = detail::json_int(j.at("shift"), "shift");
  return g;
}

inline nlohmann::json to_json(const WreathElement& g) {
  nlohmann::json support = nlohmann::json::object();
  for (const auto& [i, n] : g.tail) support[std::to_string(i)] = n;
  return {{"support", support}, {"shift", g.shift}};
}

inline WreathElement parse_wreath_literal(std::string_view text) {
  return wreath_from_json(detail::parse_json(text, "wreath literal"));
}

inline HeisElement heis_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("heis literal must be an array [x, y, z]", 0);
  return {detail::json_int(j[0], "x"), detail::json_int(j[1], "y"), detail::json_int(j[2], "z")};
}

inline nlohmann::json to_json(const HeisElement& h) { return nlohmann::json::array({h.x, h.y, h.z}); }

inline HeisElement parse_heis_literal(std::string_view text) {
  return heis_from_json(detail::parse_json(text, "heis literal"));
}

inline BSElement bs_from_json(const nlohmann::json& j, std::int64_t n) {
  if (!j.is_object()) throw ParseError("bs literal must be a JSON object", 0);
  for (const auto& [key, _] : j.items())
    if (key != "num" && key != "den_exp" && key != "dil" && key != "n")
      throw ParseError("bs literal: unexpected key \"" + key + "\"", 0);
  if (j.contains("n") && detail::json_int(j.at("n"), "n") != n)
    throw ParseError("bs literal: n does not match the group bs:" + std::to_string(n), 0);
  const auto field = [&](const char* key) { return j.contains(key) ? detail::json_int(j.at(key), key) : 0; };
  const std::int64_t den_exp = field("den_exp");
  if (den_exp < 0) throw ParseError("bs literal: den_exp must be non-negative", 0);
  return bs_make(field("num"), den_exp, field("dil"), n);
}

inline nlohmann::json to_json(const BSElement& g) {
  return {{"num", g.num}, {"den_exp", g.den_exp}, {"dil", g.dil}, {"n", g.n}};
}

inline BSElement parse_bs_literal(std::string_view text, std::int64_t n) {
  return bs_from_json(detail::parse_json(text, "bs literal"), n);
}

}  // namespace palwidth
