// Copyright 2026 The qga Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qga/ontology.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qga/error.h"

namespace qga {
namespace {

bool IsRoleChar(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '-' || c == '_';
}

std::string Where(const std::string &event_type, const std::string &role,
                  std::size_t index) {
  return "(" + event_type + ", " + role + ", template " +
         std::to_string(index) + ")";
}

bool ListHas(const std::vector<std::string> &v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

bool EventTypeDef::HasRole(std::string_view role) const {
  return ListHas(roles, role);
}

std::vector<TemplatePiece> SplitPlaceholders(std::string_view text) {
  std::vector<TemplatePiece> pieces;
  std::string literal;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '[') {
      std::size_t j = i + 1;
      while (j < text.size() && IsRoleChar(text[j])) ++j;
      if (j > i + 1 && j < text.size() && text[j] == ']') {
        if (!literal.empty()) {
          pieces.push_back({false, std::move(literal)});
          literal.clear();
        }
        pieces.push_back({true, std::string(text.substr(i + 1, j - i - 1))});
        i = j + 1;
        continue;
      }
    }
    literal += text[i];
    ++i;
  }
  if (!literal.empty()) pieces.push_back({false, std::move(literal)});
  return pieces;
}

std::string RenderPieces(const std::vector<TemplatePiece> &pieces) {
  std::string out;
  for (const TemplatePiece &p : pieces) {
    if (p.is_slot) {
      out += '[';
      out += p.text;
      out += ']';
    } else {
      out += p.text;
    }
  }
  return out;
}

std::vector<std::string> PlaceholderRoles(std::string_view text) {
  std::vector<std::string> roles;
  for (TemplatePiece &p : SplitPlaceholders(text)) {
    if (p.is_slot) roles.push_back(std::move(p.text));
  }
  return roles;
}

TemplateRegistry::TemplateRegistry(std::vector<EventTypeDef> event_types,
                                   std::vector<DynamicTemplate> templates)
    : event_types_(std::move(event_types)) {
  std::set<std::string> names;
  for (const EventTypeDef &def : event_types_) {
    if (def.name.empty()) throw ValidationError("event type with empty name");
    if (!names.insert(def.name).second) {
      throw ValidationError("duplicate event type " + def.name);
    }
    std::set<std::string> seen;
    for (const std::string &role : def.roles) {
      if (role.empty() || !seen.insert(role).second) {
        throw ValidationError("event type " + def.name +
                              ": empty or duplicate role '" + role + "'");
      }
    }
    for (const std::string &role : def.unlisted_roles) {
      if (role.empty() || !seen.insert(role).second) {
        throw ValidationError("event type " + def.name +
                              ": empty or duplicate unlisted role '" + role +
                              "'");
      }
    }
  }
  for (DynamicTemplate &t : templates) {
    const EventTypeDef *def = FindEventType(t.event_type);
    auto &entry = entries_[{t.event_type, t.target_role}];
    if (def == nullptr) {
      throw ValidationError(Where(t.event_type, t.target_role, entry.size()) +
                            ": unknown event type");
    }
    if (!def->HasRole(t.target_role)) {
      throw ValidationError(Where(t.event_type, t.target_role, entry.size()) +
                            ": target role is not a role of the event type");
    }
    entry.push_back(std::move(t));
  }
  Validate();
}

void TemplateRegistry::Validate() const {
  for (const EventTypeDef &def : event_types_) {
    for (const std::string &role : def.roles) {
      auto it = entries_.find({def.name, role});
      if (it == entries_.end() || it->second.empty()) {
        throw ValidationError(Where(def.name, role, 0) +
                              ": empty template list");
      }
      const auto &entry = it->second;
      std::set<std::set<std::string>> slot_sets;
      for (std::size_t i = 0; i < entry.size(); ++i) {
        const DynamicTemplate &t = entry[i];
        const std::string where = Where(def.name, role, i);
        if (t.is_base() != (i == 0)) {
          throw ValidationError(
              where + ": the base template must be first and unique");
        }
        std::set<std::string> slots;
        for (const std::string &slot : t.slot_roles) {
          if (slot == role) {
            throw ValidationError(where + ": target role used as a slot");
          }
          if (!def.HasRole(slot) && !ListHas(def.unlisted_roles, slot)) {
            throw ValidationError(where + ": unknown slot role '" + slot +
                                  "'");
          }
          if (!slots.insert(slot).second) {
            throw ValidationError(where + ": duplicate slot role '" + slot +
                                  "'");
          }
        }
        std::vector<std::string> found = PlaceholderRoles(t.text);
        std::vector<std::string> expected = t.slot_roles;
        std::sort(found.begin(), found.end());
        std::sort(expected.begin(), expected.end());
        if (found != expected) {
          throw ValidationError(where +
                                ": placeholders do not match slot roles in \"" +
                                t.text + "\"");
        }
        if (t.text.empty() || t.text.back() != '?') {
          throw ValidationError(where + ": text must end with '?'");
        }
        if (!slot_sets.insert(slots).second) {
          throw ValidationError(where + ": duplicate slot-role set");
        }
      }
    }
  }
}

const EventTypeDef *TemplateRegistry::FindEventType(
    std::string_view name) const {
  for (const EventTypeDef &def : event_types_) {
    if (def.name == name) return &def;
  }
  return nullptr;
}

const EventTypeDef &TemplateRegistry::GetEventType(
    std::string_view name) const {
  const EventTypeDef *def = FindEventType(name);
  if (def == nullptr) {
    throw LookupError("unknown event type " + std::string(name));
  }
  return *def;
}

bool TemplateRegistry::Contains(std::string_view event_type,
                                std::string_view role) const {
  return entries_.count({std::string(event_type), std::string(role)}) > 0;
}

const std::vector<DynamicTemplate> &TemplateRegistry::Templates(
    std::string_view event_type, std::string_view role) const {
  auto it = entries_.find({std::string(event_type), std::string(role)});
  if (it == entries_.end()) {
    throw LookupError("no templates for (" + std::string(event_type) + ", " +
                      std::string(role) + ")");
  }
  return it->second;
}

std::size_t TemplateRegistry::template_count() const {
  std::size_t n = 0;
  for (const auto &[key, entry] : entries_) n += entry.size();
  return n;
}

TemplateRegistry ParseRegistry(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("registry: ") + e.what());
  }
  std::vector<EventTypeDef> event_types;
  std::vector<DynamicTemplate> templates;
  try {
    if (!doc.is_object()) throw ParseError("registry: top level must be an object");
    if (doc.contains("version") && doc.at("version").get<int>() != 1) {
      throw ParseError("registry: unsupported version " +
                       doc.at("version").dump());
    }
    for (const json &e : doc.at("event_types")) {
      EventTypeDef def;
      def.name = e.at("name").get<std::string>();
      def.roles = e.at("roles").get<std::vector<std::string>>();
      if (e.contains("unlisted_roles")) {
        def.unlisted_roles =
            e.at("unlisted_roles").get<std::vector<std::string>>();
      }
      event_types.push_back(std::move(def));
    }
    for (const json &t : doc.at("templates")) {
      DynamicTemplate tmpl;
      tmpl.event_type = t.at("event_type").get<std::string>();
      tmpl.target_role = t.at("target_role").get<std::string>();
      tmpl.slot_roles = t.at("slots").get<std::vector<std::string>>();
      tmpl.text = t.at("text").get<std::string>();
      templates.push_back(std::move(tmpl));
    }
  } catch (const json::exception &e) {
    throw ParseError(std::string("registry: ") + e.what());
  }
  return TemplateRegistry(std::move(event_types), std::move(templates));
}

TemplateRegistry LoadRegistry(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open registry file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseRegistry(buffer.str());
  } catch (const ParseError &e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const ValidationError &e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

const std::vector<DynamicTemplate> &TemplatesFor(
    const TemplateRegistry &registry, std::string_view event_type,
    std::string_view role) {
  return registry.Templates(event_type, role);
}

TemplateCount ExpectedTemplateCount(const TemplateRegistry &registry,
                                    std::string_view event_type,
                                    std::string_view role) {
  const auto &entry = registry.Templates(event_type, role);
  const EventTypeDef &def = registry.GetEventType(event_type);

  std::set<std::string> slotted;
  for (const DynamicTemplate &t : entry) {
    slotted.insert(t.slot_roles.begin(), t.slot_roles.end());
  }
  TemplateCount count;
  count.expected = std::size_t{1} << slotted.size();
  count.stored = entry.size();
  count.reduced = count.stored != count.expected;
  for (const auto *roles : {&def.roles, &def.unlisted_roles}) {
    for (const std::string &other : *roles) {
      if (other != role && slotted.count(other) == 0) count.reduced = true;
    }
  }
  return count;
}

}  // namespace qga
