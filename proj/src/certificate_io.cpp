#include "heartproof/certificate_io.hpp"

#include <json.hpp>

#include "heartproof/error.hpp"

namespace heartproof {

using nlohmann::json;

std::string certificate_to_json(const Certificate& c) {
  json checks = json::array();
  for (const auto& h : c.checks)
    checks.push_back({{"anchor", h.anchor}, {"kind", to_string(h.kind)}, {"pass", h.pass}, {"detail", h.detail}});
  json conclusion = {{"kind", to_string(c.conclusion.kind)}, {"ring", c.conclusion.ring}, {"fields", c.conclusion.fields}};
  conclusion["dimension"] = c.conclusion.dimension ? json(c.conclusion.dimension->str()) : json(nullptr);
  json j = {
      {"schema", kCertificateSchema},
      {"theorem", c.theorem},
      {"scenario", {{"n", c.n}, {"p", c.p}, {"r", c.r}, {"group", c.group}}},
      {"checks", checks},
      {"notes", c.notes},
      {"conclusion", conclusion},
  };
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.at("schema").get<std::string>() != kCertificateSchema)
      throw Error(ErrorCode::ParseError, "unsupported certificate schema");
    Certificate c;
    c.theorem = j.at("theorem").get<std::string>();
    const auto& s = j.at("scenario");
    c.n = s.at("n").get<std::uint32_t>();
    c.p = s.at("p").get<std::uint32_t>();
    c.r = s.at("r").get<std::uint32_t>();
    c.group = s.at("group").get<std::string>();
    for (const auto& h : j.at("checks"))
      c.checks.push_back({h.at("anchor").get<std::string>(), check_kind_from_string(h.at("kind").get<std::string>()),
                          h.at("pass").get<bool>(), h.at("detail").get<std::string>()});
    c.notes = j.at("notes").get<std::vector<std::string>>();
    const auto& k = j.at("conclusion");
    c.conclusion.kind = conclusion_kind_from_string(k.at("kind").get<std::string>());
    c.conclusion.ring = k.at("ring").get<std::string>();
    c.conclusion.fields = k.at("fields").get<std::vector<std::string>>();
    if (!k.at("dimension").is_null()) c.conclusion.dimension = BigInt(k.at("dimension").get<std::string>());
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("certificate: ") + e.what());
  }
}

}  // namespace heartproof
