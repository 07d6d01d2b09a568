// Copyright 2026 The fatpoints Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fatpoints/spec_text.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "fatpoints/error.hpp"

namespace fatpoints {

namespace {

// One comma-separated item before "^k" expansion.
struct Item {
  std::size_t offset = 0;
  FatPoint point;
  int repeat = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SchemeSpec run() {
    SchemeSpec spec;
    expect('L');
    expect('(');
    spec.n = integer("ambient dimension");
    expect(',');
    spec.d = integer("degree");
    std::vector<Item> items;
    std::map<int, std::pair<std::size_t, std::vector<std::int64_t>>> defs;
    if (accept(';')) {
      if (!at_defs() && peek() != ')' && peek() != ';') items = parse_items();
      if (at_defs() || accept(';')) defs = parse_defs();
    }
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");

    for (const auto& [id, def] : defs) {
      if (id != static_cast<int>(spec.explicit_points.size())) {
        throw ParseError("explicit point ids must be 0,1,2,... without gaps", def.first);
      }
      spec.explicit_points.push_back(def.second);
    }
    check_semantics(spec, items);
    for (const Item& it : items) {
      for (int r = 0; r < it.repeat; ++r) spec.points.push_back(it.point);
    }
    normalize_flag(spec);
    validate(spec);
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < text_.size() ? std::string("expected '") + c + "', found '" + text_[pos_] + "'"
                               : std::string("expected '") + c + "' before end of input");
    }
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  bool at_defs() {
    skip_ws();
    return text_.substr(pos_, 2) == "pt";
  }

  std::int64_t signed_integer(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      fail(std::string("expected ") + what);
    }
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (INT64_MAX - 9) / 10) {
        pos_ = start;
        fail(std::string(what) + " is too large");
      }
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  int integer(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail(std::string("expected ") + what);
    }
    const std::int64_t v = signed_integer(what);
    if (v > 1'000'000) {
      pos_ = start;
      fail(std::string(what) + " is too large");
    }
    return static_cast<int>(v);
  }

  Placement placement() {
    if (accept_word("gen")) return Generic{};
    if (accept_word("H")) return OnSubspace{integer("subspace dimension")};
    if (accept_word("pt")) return Explicit{integer("point id")};
    if (accept_word("near")) {
      expect('(');
      NearCluster c;
      c.center = integer("cluster center");
      expect(',');
      c.scale = signed_integer("cluster scale");
      expect(')');
      return c;
    }
    fail("expected placement 'gen', 'H<dim>', 'pt<id>' or 'near(c,s)'");
  }

  std::vector<Item> parse_items() {
    std::vector<Item> items;
    do {
      Item it;
      skip_ws();
      it.offset = pos_;
      it.point.multiplicity = integer("multiplicity");
      if (accept('[')) {
        do {
          const int count = integer("direction count");
          Placement p = Generic{};
          if (accept('@')) p = placement();
          it.point.directions.insert(it.point.directions.end(), static_cast<std::size_t>(count), p);
        } while (accept('+'));
        expect(']');
      }
      if (accept('^')) it.repeat = integer("repetition");
      if (accept('@')) it.point.placement = placement();
      items.push_back(std::move(it));
    } while (accept(','));
    return items;
  }

  std::map<int, std::pair<std::size_t, std::vector<std::int64_t>>> parse_defs() {
    std::map<int, std::pair<std::size_t, std::vector<std::int64_t>>> defs;
    do {
      skip_ws();
      const std::size_t start = pos_;
      if (!accept_word("pt")) fail("expected 'pt<id>=(...)'");
      const int id = integer("point id");
      expect('=');
      expect('(');
      std::vector<std::int64_t> coords;
      do {
        coords.push_back(signed_integer("coordinate"));
      } while (accept(','));
      expect(')');
      if (!defs.emplace(id, std::make_pair(start, std::move(coords))).second) {
        throw ParseError("explicit point " + std::to_string(id) + " defined twice", start);
      }
    } while (accept(','));
    return defs;
  }

  // Item-level checks so errors name the item as written.
  static void check_semantics(const SchemeSpec& spec, const std::vector<Item>& items) {
    auto home = [&](const Placement& p, std::size_t item) -> int {
      if (const auto* s = std::get_if<OnSubspace>(&p)) return s->dim;
      if (const auto* e = std::get_if<Explicit>(&p)) {
        if (e->id < 0 || static_cast<std::size_t>(e->id) >= spec.explicit_points.size()) {
          throw SemanticError("explicit point pt" + std::to_string(e->id) + " is undefined",
                              item);
        }
        const auto& c = spec.explicit_points[static_cast<std::size_t>(e->id)];
        if (c.size() != static_cast<std::size_t>(spec.n) + 1) {
          throw SemanticError("explicit point pt" + std::to_string(e->id) + " needs " +
                                  std::to_string(spec.n + 1) + " coordinates",
                              item);
        }
        int k = spec.n;
        while (k > 0 && c[static_cast<std::size_t>(k)] == 0) --k;
        return k;
      }
      return spec.n;
    };
    auto check_dim = [&](const Placement& p, std::size_t item) {
      if (const auto* s = std::get_if<OnSubspace>(&p); s && (s->dim < 0 || s->dim >= spec.n)) {
        throw SemanticError("subspace dimension " + std::to_string(s->dim) +
                                " must be below the ambient dimension " + std::to_string(spec.n),
                            item);
      }
    };
    std::size_t expanded = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const Item& it = items[i];
      if (it.point.multiplicity < 1) throw SemanticError("multiplicity must be at least 1", i);
      if (it.repeat < 1) throw SemanticError("repetition must be at least 1", i);
      check_dim(it.point.placement, i);
      if (const auto* c = std::get_if<NearCluster>(&it.point.placement);
          c && static_cast<std::size_t>(c->center) >= expanded) {
        throw SemanticError("cluster center must be an earlier point", i);
      }
      const int h = std::holds_alternative<NearCluster>(it.point.placement)
                        ? spec.n
                        : home(it.point.placement, i);
      for (const Placement& v : it.point.directions) {
        check_dim(v, i);
        if (std::holds_alternative<NearCluster>(v)) {
          throw SemanticError("directions cannot be cluster placements", i);
        }
        const int hv = home(v, i);
        if (std::holds_alternative<OnSubspace>(v) && h > hv) {
          throw SemanticError("direction in H" + std::to_string(hv) +
                                  " on a point lacking that subspace",
                              i);
        }
      }
      expanded += static_cast<std::size_t>(it.repeat);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string directions_to_string(const std::vector<Placement>& dirs) {
  std::string out = "[";
  for (std::size_t i = 0; i < dirs.size();) {
    std::size_t j = i;
    while (j < dirs.size() && dirs[j] == dirs[i]) ++j;
    if (i > 0) out += '+';
    out += std::to_string(j - i);
    if (!std::holds_alternative<Generic>(dirs[i])) out += '@' + placement_to_string(dirs[i]);
    i = j;
  }
  return out + "]";
}

nlohmann::json placement_json(const Placement& p) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Generic>) {
          return {{"kind", "generic"}};
        } else if constexpr (std::is_same_v<T, OnSubspace>) {
          return {{"kind", "subspace"}, {"dim", v.dim}};
        } else if constexpr (std::is_same_v<T, Explicit>) {
          return {{"kind", "explicit"}, {"id", v.id}};
        } else {
          return {{"kind", "near"}, {"center", v.center}, {"scale", v.scale}};
        }
      },
      p);
}

Placement placement_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "generic") return Generic{};
  if (kind == "subspace") return OnSubspace{j.at("dim").get<int>()};
  if (kind == "explicit") return Explicit{j.at("id").get<int>()};
  if (kind == "near") return NearCluster{j.at("center").get<int>(), j.at("scale").get<std::int64_t>()};
  throw InvalidArgument("unknown placement kind '" + kind + "'");
}

}  // namespace

SchemeSpec parse_spec(std::string_view text) { return Parser(text).run(); }

std::string placement_to_string(const Placement& p) {
  if (std::holds_alternative<Generic>(p)) return "gen";
  if (const auto* s = std::get_if<OnSubspace>(&p)) return "H" + std::to_string(s->dim);
  if (const auto* e = std::get_if<Explicit>(&p)) return "pt" + std::to_string(e->id);
  const auto& c = std::get<NearCluster>(p);
  return "near(" + std::to_string(c.center) + "," + std::to_string(c.scale) + ")";
}

std::string print_spec(const SchemeSpec& spec) {
  std::ostringstream out;
  out << "L(" << spec.n << ',' << spec.d;
  if (!spec.points.empty() || !spec.explicit_points.empty()) out << ';';
  for (std::size_t i = 0; i < spec.points.size();) {
    std::size_t j = i;
    while (j < spec.points.size() && spec.points[j] == spec.points[i]) ++j;
    const FatPoint& p = spec.points[i];
    if (i > 0) out << ',';
    out << p.multiplicity;
    if (!p.directions.empty()) out << directions_to_string(p.directions);
    if (j - i > 1) out << '^' << (j - i);
    if (!std::holds_alternative<Generic>(p.placement)) out << '@' << placement_to_string(p.placement);
    i = j;
  }
  if (!spec.explicit_points.empty()) {
    out << ';';
    for (std::size_t e = 0; e < spec.explicit_points.size(); ++e) {
      if (e > 0) out << ',';
      out << "pt" << e << "=(";
      for (std::size_t c = 0; c < spec.explicit_points[e].size(); ++c) {
        if (c > 0) out << ',';
        out << spec.explicit_points[e][c];
      }
      out << ')';
    }
  }
  out << ')';
  return out.str();
}

nlohmann::json spec_to_json(const SchemeSpec& spec) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : spec.points) {
    nlohmann::json dirs = nlohmann::json::array();
    for (const auto& v : p.directions) dirs.push_back(placement_json(v));
    points.push_back({{"multiplicity", p.multiplicity},
                      {"placement", placement_json(p.placement)},
                      {"directions", dirs}});
  }
  return {{"n", spec.n},
          {"d", spec.d},
          {"flag", spec.flag},
          {"explicit_points", spec.explicit_points},
          {"points", points},
          {"text", print_spec(spec)}};
}

SchemeSpec spec_from_json(const nlohmann::json& j) {
  SchemeSpec spec;
  try {
    spec.n = j.at("n").get<int>();
    spec.d = j.at("d").get<int>();
    if (j.contains("flag")) spec.flag = j.at("flag").get<std::vector<int>>();
    if (j.contains("explicit_points")) {
      spec.explicit_points = j.at("explicit_points").get<std::vector<std::vector<std::int64_t>>>();
    }
    for (const auto& p : j.at("points")) {
      FatPoint fp;
      fp.multiplicity = p.at("multiplicity").get<int>();
      if (p.contains("placement")) fp.placement = placement_from_json(p.at("placement"));
      if (p.contains("directions")) {
        for (const auto& v : p.at("directions")) fp.directions.push_back(placement_from_json(v));
      }
      spec.points.push_back(std::move(fp));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed scheme JSON: ") + e.what());
  }
  normalize_flag(spec);
  validate(spec);
  return spec;
}

}  // namespace fatpoints
