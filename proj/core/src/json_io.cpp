#include "cliffmodel/json_io.hpp"

#include <cctype>

#include <json.hpp>

#include "cliffmodel/errors.hpp"

namespace cliff {

namespace {

using nlohmann::json;

std::string role_to_string(Role role) {
  switch (role) {
    case Role::ComplexPositive: return "complex-positive";
    case Role::ComplexNegative: return "complex-negative";
    case Role::Real: return "real";
  }
  throw invalid_argument("unknown role enumerator");
}

Role role_from_string(const std::string& text) {
  if (text == "complex-positive") return Role::ComplexPositive;
  if (text == "complex-negative") return Role::ComplexNegative;
  if (text == "real") return Role::Real;
  throw parse_error("unknown role '" + text + "'");
}

std::string hat_to_string(HatChoice hat) {
  switch (hat) {
    case HatChoice::Default: return "default";
    case HatChoice::R: return "r";
    case HatChoice::RPrime: return "r-prime";
  }
  throw invalid_argument("unknown hat enumerator");
}

HatChoice hat_from_string(const std::string& text) {
  if (text == "default") return HatChoice::Default;
  if (text == "r") return HatChoice::R;
  if (text == "r-prime") return HatChoice::RPrime;
  throw parse_error("unknown hat choice '" + text + "'");
}

json reality_to_json(const RealityLayout& layout) {
  return json{{"factors", layout.factors},
              {"phase", layout.phase.to_string()}};
}

RealityLayout reality_from_json(const json& j) {
  RealityLayout layout;
  layout.factors = j.at("factors").get<std::vector<int>>();
  layout.phase = Scalar::parse(j.at("phase").get<std::string>());
  return layout;
}

}  // namespace

std::string mask_to_string(Mask mask, int width) {
  if (width < 1 || width > 16) throw invalid_argument("mask width out of range");
  std::string out = "0b";
  for (int bit = width - 1; bit >= 0; --bit)
    out += (mask >> bit) & 1 ? '1' : '0';
  return out;
}

Mask mask_from_string(const std::string& text) {
  if (text.size() < 3 || text.compare(0, 2, "0b") != 0)
    throw parse_error("mask literal must start with 0b: '" + text + "'");
  Mask mask = 0;
  for (std::size_t pos = 2; pos < text.size(); ++pos) {
    if (text[pos] != '0' && text[pos] != '1')
      throw parse_error("mask literal has a non-binary digit: '" + text + "'");
    mask = (mask << 1) | static_cast<Mask>(text[pos] - '0');
  }
  if (text.size() - 2 > 16) throw parse_error("mask literal too wide");
  return mask;
}

std::string model_to_json(const ModelSpec& spec) {
  json j;
  j["name"] = spec.name;
  j["r"] = spec.r;
  j["s"] = spec.s;
  j["t"] = spec.t;
  j["k"] = spec.k;
  j["l"] = spec.l;
  json roles = json::array();
  for (Role role : spec.roles) roles.push_back(role_to_string(role));
  j["roles"] = roles;
  json layout = json::array();
  for (const GammaEntry& e : spec.layout)
    layout.push_back(json{{"gen", e.gen},
                          {"species", e.species == Species::Sum ? "sum" : "diff"},
                          {"phase", e.phase.to_string()}});
  j["gamma_layout"] = layout;
  j["metric"] = spec.metric;
  json basis = json::array();
  for (const auto& [mask, sign] : spec.basis)
    basis.push_back(json{{"mask", mask_to_string(mask, spec.m)}, {"sign", sign}});
  j["basis_order"] = basis;
  j["top_orientation"] = spec.top_orientation;
  j["label_names"] = spec.label_names;
  j["reality"] = json{{"r", reality_to_json(spec.r_op)},
                      {"r_prime", reality_to_json(spec.r_prime_op)}};
  j["hat"] = hat_to_string(spec.hat);
  return j.dump(2);
}

ModelSpec model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("model JSON malformed: ") + e.what());
  }
  try {
    ModelSpec spec;
    spec.name = j.at("name").get<std::string>();
    spec.r = j.at("r").get<int>();
    spec.s = j.at("s").get<int>();
    spec.t = j.at("t").get<int>();
    spec.k = j.at("k").get<int>();
    spec.l = j.at("l").get<int>();
    spec.m = spec.k + spec.l + spec.t;
    for (const auto& role : j.at("roles"))
      spec.roles.push_back(role_from_string(role.get<std::string>()));
    for (const auto& entry : j.at("gamma_layout")) {
      GammaEntry e;
      e.gen = entry.at("gen").get<int>();
      std::string species = entry.at("species").get<std::string>();
      if (species != "sum" && species != "diff")
        throw parse_error("unknown species '" + species + "'");
      e.species = species == "sum" ? Species::Sum : Species::Diff;
      e.phase = Scalar::parse(entry.at("phase").get<std::string>());
      spec.layout.push_back(e);
    }
    spec.metric = j.at("metric").get<std::vector<int>>();
    for (const auto& entry : j.at("basis_order"))
      spec.basis.emplace_back(
          mask_from_string(entry.at("mask").get<std::string>()),
          entry.at("sign").get<int>());
    spec.top_orientation = j.at("top_orientation").get<int>();
    spec.label_names = j.at("label_names").get<std::vector<std::string>>();
    spec.r_op = reality_from_json(j.at("reality").at("r"));
    spec.r_prime_op = reality_from_json(j.at("reality").at("r_prime"));
    spec.hat = hat_from_string(j.at("hat").get<std::string>());
    validate_spec(spec);
    return spec;
  } catch (const json::exception& e) {
    throw parse_error(std::string("model JSON missing fields: ") + e.what());
  }
}

namespace {

// Resolves a single monomial factor name to a generator index.
int generator_from_name(const ModelSpec& spec, std::string name) {
  std::string original = name;
  if (name.size() >= 2 && name[0] == 'd' &&
      !std::isdigit(static_cast<unsigned char>(name[1])))
    name = name.substr(1);
  std::size_t split = 0;
  while (split < name.size() &&
         !std::isdigit(static_cast<unsigned char>(name[split])))
    ++split;
  if (split == 0 || split == name.size())
    throw parse_error("malformed generator name '" + original + "'");
  std::string kind = name.substr(0, split);
  int index = 0;
  try {
    index = std::stoi(name.substr(split));
  } catch (const std::exception&) {
    throw parse_error("malformed generator name '" + original + "'");
  }
  if (kind == "e") {
    if (index < 1 || index > spec.m)
      throw parse_error("generator index out of range in '" + original + "'");
    return index;
  }
  Role wanted;
  if (kind == "z") wanted = Role::ComplexPositive;
  else if (kind == "w") wanted = Role::ComplexNegative;
  else if (kind == "u") wanted = Role::Real;
  else throw parse_error("unknown generator name '" + original + "'");
  int seen = 0;
  for (int gen = 1; gen <= spec.m; ++gen) {
    if (spec.roles[gen - 1] != wanted) continue;
    if (++seen == index) return gen;
  }
  throw parse_error("model has no generator matching '" + original + "'");
}

Polyform parse_monomial(const ModelSpec& spec, const std::string& text) {
  if (text == "1") return Polyform::one(spec.m);
  if (text.size() >= 2 && text[0] == '0' && text[1] == 'b') {
    Mask mask = mask_from_string(text);
    if (mask >= (Mask{1} << spec.m))
      throw parse_error("mask '" + text + "' exceeds the generator count");
    return Polyform::monomial(spec.m, mask);
  }
  // Caret-joined factor list, wedged in the written order.
  std::vector<std::string> factors;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= text.size(); ++pos) {
    if (pos == text.size() || text[pos] == '^') {
      if (pos == start) throw parse_error("empty factor in '" + text + "'");
      factors.push_back(text.substr(start, pos - start));
      start = pos + 1;
    }
  }
  Polyform out = Polyform::one(spec.m);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    out = wedge_generator(generator_from_name(spec, *it), out);
  if (out.is_zero())
    throw parse_error("monomial '" + text + "' repeats a generator");
  return out;
}

}  // namespace

Polyform parse_polyform(const ModelSpec& spec, const std::string& text) {
  std::string clean;
  clean.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) clean.push_back(c);
  if (clean.empty()) throw parse_error("empty spinor literal");

  Polyform out(spec.m);
  std::size_t start = 0;
  int depth = 0;
  auto flush = [&](std::size_t end) {
    if (end == start) throw parse_error("empty term in spinor literal");
    std::string term = clean.substr(start, end - start);
    bool negative = false;
    if (term[0] == '+' || term[0] == '-') {
      negative = term[0] == '-';
      term = term.substr(1);
      if (term.empty()) throw parse_error("dangling sign in spinor literal");
    }
    // Split off an optional coefficient before a top-level '*'.
    Scalar coeff(1);
    std::string monomial = term;
    int inner_depth = 0;
    for (std::size_t pos = 0; pos < term.size(); ++pos) {
      if (term[pos] == '(') ++inner_depth;
      else if (term[pos] == ')') --inner_depth;
      else if (term[pos] == '*' && inner_depth == 0 &&
               pos + 1 < term.size() && term[pos + 1] != 'i') {
        std::string coeff_text = term.substr(0, pos);
        if (coeff_text.size() >= 2 && coeff_text.front() == '(' &&
            coeff_text.back() == ')')
          coeff_text = coeff_text.substr(1, coeff_text.size() - 2);
        coeff = Scalar::parse(coeff_text);
        monomial = term.substr(pos + 1);
        break;
      }
    }
    if (monomial.empty()) throw parse_error("term lacks a monomial");
    if (monomial.find('(') != std::string::npos)
      throw parse_error("unexpected parenthesis in monomial '" + monomial + "'");
    Polyform piece(spec.m);
    bool pure_scalar =
        monomial.find('^') == std::string::npos &&
        (std::isdigit(static_cast<unsigned char>(monomial[0])) ||
         monomial == "i") &&
        monomial.compare(0, 2, "0b") != 0;
    if (monomial != "1" && pure_scalar) {
      // A bare scalar term such as "2" or "3/4*i" (the latter already split
      // at '*i' is excluded above, so handle "i" and digits here).
      coeff = coeff * Scalar::parse(monomial);
      piece = Polyform::one(spec.m);
    } else {
      piece = parse_monomial(spec, monomial);
    }
    if (negative) coeff = -coeff;
    out += coeff * piece;
  };
  for (std::size_t pos = 0; pos < clean.size(); ++pos) {
    char c = clean[pos];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if ((c == '+' || c == '-') && depth == 0 && pos > start &&
             pos != start) {
      // A sign directly after '^' or '*' would be part of a malformed term;
      // only split when the previous character ends a term.
      char prev = clean[pos - 1];
      if (prev != '^' && prev != '*' && prev != '(') {
        flush(pos);
        start = pos;
      }
    }
  }
  if (depth != 0) throw parse_error("unbalanced parentheses in spinor literal");
  flush(clean.size());
  return out;
}

}  // namespace cliff
