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

#ifndef QGA_ONTOLOGY_H_
#define QGA_ONTOLOGY_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qga {

// An event type and its argument roles. `roles` are the roles that carry
// question templates, in file order. `unlisted_roles` belong to the
// ontology but have no templates; they are never queried.
struct EventTypeDef {
  std::string name;
  std::vector<std::string> roles;
  std::vector<std::string> unlisted_roles;

  bool HasRole(std::string_view role) const;
  bool operator==(const EventTypeDef &) const = default;
};

// A question for `target_role` parameterized by the arguments of other
// roles. Each slot role appears in `text` exactly once as "[Role]".
struct DynamicTemplate {
  std::string event_type;
  std::string target_role;
  std::vector<std::string> slot_roles;
  std::string text;

  bool is_base() const { return slot_roles.empty(); }
  bool operator==(const DynamicTemplate &) const = default;
};

// A piece of template text: either literal text or a "[Role]" slot.
struct TemplatePiece {
  bool is_slot = false;
  std::string text;  // literal text, or the role name for slots

  bool operator==(const TemplatePiece &) const = default;
};

// Splits template text into literal and slot pieces. A slot is "[" followed
// by a role name (letters, digits, '-', '_') and "]"; any other bracket is
// literal.
std::vector<TemplatePiece> SplitPlaceholders(std::string_view text);

// Inverse of SplitPlaceholders.
std::string RenderPieces(const std::vector<TemplatePiece> &pieces);

// Role names of the slots in `text`, in order of appearance.
std::vector<std::string> PlaceholderRoles(std::string_view text);

// Immutable (event type, target role) -> template list mapping.
class TemplateRegistry {
 public:
  using Key = std::pair<std::string, std::string>;

  TemplateRegistry() = default;

  // Builds and validates a registry. Throws ValidationError naming the
  // offending (event type, role, template index).
  TemplateRegistry(std::vector<EventTypeDef> event_types,
                   std::vector<DynamicTemplate> templates);

  const std::vector<EventTypeDef> &event_types() const { return event_types_; }

  // Null when unknown.
  const EventTypeDef *FindEventType(std::string_view name) const;

  // Throws LookupError when unknown.
  const EventTypeDef &GetEventType(std::string_view name) const;

  bool Contains(std::string_view event_type, std::string_view role) const;

  // Templates for an entry in file order; the base template is first.
  // Throws LookupError for unknown entries.
  const std::vector<DynamicTemplate> &Templates(std::string_view event_type,
                                                std::string_view role) const;

  std::size_t template_count() const;

  bool operator==(const TemplateRegistry &) const = default;

 private:
  void Validate() const;

  std::vector<EventTypeDef> event_types_;
  std::map<Key, std::vector<DynamicTemplate>> entries_;
};

// Parses the registry JSON format (see docs/registry_format.md).
// Throws ParseError on malformed input and ValidationError on invariant
// violations.
TemplateRegistry ParseRegistry(std::string_view json_text);
TemplateRegistry LoadRegistry(const std::filesystem::path &path);

const std::vector<DynamicTemplate> &TemplatesFor(
    const TemplateRegistry &registry, std::string_view event_type,
    std::string_view role);

struct TemplateCount {
  std::size_t expected = 0;  // 2^k, k = other roles used in any slot set
  std::size_t stored = 0;    // templates actually in the entry
  bool reduced = false;      // fewer templates than the full powerset
};

// Compares an entry against the powerset of the other roles. An entry is
// reduced when stored != 2^k or when some other role of the event type
// (including unlisted roles) never appears in a slot set.
TemplateCount ExpectedTemplateCount(const TemplateRegistry &registry,
                                    std::string_view event_type,
                                    std::string_view role);

}  // namespace qga

#endif  // QGA_ONTOLOGY_H_
