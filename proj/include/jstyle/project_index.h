// Copyright 2026 The jstyle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Project-wide type table used by the cross-file checks.

#ifndef JSTYLE_PROJECT_INDEX_H_
#define JSTYLE_PROJECT_INDEX_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jstyle/source_model.h"

namespace jstyle {

struct MethodSignature {
  std::string name;
  int arity = 0;
  std::vector<std::string> paramTypeNames;  // erased simple names

  static MethodSignature Of(const MemberFact& method);
  std::string ToString() const;  // name(T1,T2)

  auto operator<=>(const MethodSignature&) const = default;
};

using TypeId = std::size_t;

struct SupertypeRef {
  std::string written;  // as in the source
  std::optional<TypeId> target;  // unset: external
};

struct MethodEntry {
  MethodSignature signature;
  bool isStatic = false;
  bool isPrivate = false;
  bool deprecated = false;
  // Some parameter type is a type variable of the method or its owner.
  bool usesTypeVariable = false;
};

struct TypeEntry {
  std::string qualifiedName;  // empty for local types
  std::string simpleName;
  TypeKind kind = TypeKind::kClass;
  std::size_t fileIndex = 0;  // into the model list given to Build
  std::size_t typeIndex = 0;  // into SourceFileModel::types
  std::optional<TypeId> outer;
  bool isLocal = false;
  std::vector<std::string> typeParams;
  std::vector<SupertypeRef> supertypes;
  std::vector<MethodEntry> methods;
  std::set<std::string> staticMembers;    // names of static fields/methods
  std::set<std::string> instanceMembers;  // names of instance fields/methods
};

struct OverrideResolution {
  bool overrides = false;
  bool parentDeprecated = false;
  bool parentResolved = true;

  bool operator==(const OverrideResolution&) const = default;
};

struct StaticAccessResolution {
  bool isStaticMember = false;
  bool qualifiedCorrectly = false;
  bool resolved = false;

  bool operator==(const StaticAccessResolution&) const = default;
};

class ProjectIndex {
 public:
  static ProjectIndex Build(const std::vector<SourceFileModel>& models);

  const std::vector<TypeEntry>& types() const { return types_; }
  std::optional<TypeId> FindQualified(std::string_view qualified_name) const;
  std::optional<TypeId> TypeOf(std::size_t file_index,
                               std::size_t type_index) const;

  // Resolves a type name as written inside the given type of the given file:
  // enclosing and same-file types, then explicit imports, the package and
  // wildcard imports. Unset when the name is not a project type.
  std::optional<TypeId> ResolveTypeName(std::size_t file_index,
                                        std::size_t type_index,
                                        std::string_view written) const;

  // Project-local supertypes, transitively, breadth first. `saw_external`
  // reports whether any external supertype was met on the way.
  std::vector<TypeId> Ancestors(TypeId id, bool* saw_external = nullptr) const;

  // Direct supertypes by qualified name; "java.lang.Object" terminates every
  // class chain.
  std::vector<std::string> Hierarchy(TypeId id) const;

  const std::set<std::pair<std::string, MethodSignature>>& deprecatedMethods()
      const {
    return deprecated_;
  }
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::optional<TypeId> ResolveSimple(std::size_t file_index,
                                      std::optional<TypeId> context,
                                      std::string_view name) const;
  std::optional<TypeId> ResolveWritten(std::size_t file_index,
                                       std::optional<TypeId> context,
                                       std::string_view written) const;

  std::vector<TypeEntry> types_;
  std::map<std::string, TypeId, std::less<>> by_qualified_;
  std::map<std::pair<std::size_t, std::size_t>, TypeId> by_position_;
  std::set<std::pair<std::string, MethodSignature>> deprecated_;
  std::vector<std::string> diagnostics_;
  // Per file: package name, explicit imports (simple -> qualified) and
  // wildcard packages.
  struct FileScope {
    std::string package;
    std::map<std::string, std::string, std::less<>> imports;
    std::vector<std::string> wildcards;
    std::vector<TypeId> types;
  };
  std::vector<FileScope> scopes_;
};

// `method` must be a method of models[file_index].types[type_index].
OverrideResolution ResolveOverride(const ProjectIndex& index,
                                   std::size_t file_index,
                                   std::size_t type_index,
                                   const MemberFact& method);

StaticAccessResolution ResolveStaticAccess(const ProjectIndex& index,
                                           std::size_t file_index,
                                           std::size_t type_index,
                                           const AccessFact& access);

}  // namespace jstyle

#endif  // JSTYLE_PROJECT_INDEX_H_
