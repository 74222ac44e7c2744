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

#include "jstyle/project_index.h"

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

namespace jstyle {
namespace {

constexpr std::string_view kObject = "java.lang.Object";

std::string StripArrays(std::string_view type) {
  return std::string(type.substr(0, type.find('[')));
}

std::string Head(std::string_view dotted) {
  return std::string(dotted.substr(0, dotted.find('.')));
}

bool IsObjectMethod(const MethodSignature& sig) {
  if (sig.name == "equals") {
    return sig.arity == 1 && sig.paramTypeNames[0] == "Object";
  }
  return sig.arity == 0 && (sig.name == "hashCode" || sig.name == "toString" ||
                            sig.name == "clone" || sig.name == "finalize");
}

}  // namespace

MethodSignature MethodSignature::Of(const MemberFact& method) {
  MethodSignature sig;
  sig.name = method.name;
  for (const Param& p : method.params) sig.paramTypeNames.push_back(p.typeName);
  sig.arity = static_cast<int>(sig.paramTypeNames.size());
  return sig;
}

std::string MethodSignature::ToString() const {
  std::string out = name + "(";
  for (std::size_t i = 0; i < paramTypeNames.size(); ++i) {
    if (i > 0) out += ",";
    out += paramTypeNames[i];
  }
  return out + ")";
}

ProjectIndex ProjectIndex::Build(const std::vector<SourceFileModel>& models) {
  ProjectIndex index;
  index.scopes_.resize(models.size());

  for (std::size_t f = 0; f < models.size(); ++f) {
    const SourceFileModel& model = models[f];
    FileScope& scope = index.scopes_[f];
    scope.package = model.PackageName();
    for (const ImportFact& imp : model.imports) {
      if (imp.isStatic) continue;
      if (imp.isWildcard) {
        scope.wildcards.push_back(imp.importedName);
      } else {
        std::string simple = imp.importedName.substr(
            imp.importedName.rfind('.') + 1);
        scope.imports.emplace(simple, imp.importedName);
      }
    }

    for (std::size_t t = 0; t < model.types.size(); ++t) {
      const TypeFact& type = model.types[t];
      TypeEntry e;
      e.simpleName = type.name;
      e.kind = type.kind;
      e.fileIndex = f;
      e.typeIndex = t;
      e.isLocal = type.isLocal;
      e.typeParams = type.typeParams;
      if (type.outer) e.outer = index.by_position_.at({f, *type.outer});
      if (!type.isLocal) {
        if (e.outer) {
          const std::string& oq = index.types_[*e.outer].qualifiedName;
          if (!oq.empty()) e.qualifiedName = oq + "." + type.name;
        } else {
          e.qualifiedName = scope.package.empty()
                                ? type.name
                                : scope.package + "." + type.name;
        }
      }

      std::vector<std::string> type_vars = e.typeParams;
      for (std::optional<TypeId> cur = e.outer; cur;
           cur = index.types_[*cur].outer) {
        const auto& tp = index.types_[*cur].typeParams;
        type_vars.insert(type_vars.end(), tp.begin(), tp.end());
      }

      for (const MemberFact& m : type.members) {
        const bool is_static = m.kind == MemberKind::kStaticMethod ||
                               m.kind == MemberKind::kStaticField;
        if (m.IsField() || m.IsMethod()) {
          (is_static ? e.staticMembers : e.instanceMembers).insert(m.name);
        }
        if (!m.IsMethod()) continue;
        MethodEntry me;
        me.signature = MethodSignature::Of(m);
        me.isStatic = m.kind == MemberKind::kStaticMethod;
        me.isPrivate = m.visibility == Visibility::kPrivate;
        me.deprecated = m.HasAnnotation("Deprecated");
        for (const std::string& p : me.signature.paramTypeNames) {
          std::string base = StripArrays(p);
          if (std::find(m.typeParams.begin(), m.typeParams.end(), base) !=
                  m.typeParams.end() ||
              std::find(type_vars.begin(), type_vars.end(), base) !=
                  type_vars.end()) {
            me.usesTypeVariable = true;
          }
        }
        e.methods.push_back(std::move(me));
      }

      TypeId id = index.types_.size();
      if (!e.qualifiedName.empty()) {
        auto [it, inserted] = index.by_qualified_.emplace(e.qualifiedName, id);
        if (!inserted) {
          index.diagnostics_.push_back(
              "duplicate type " + e.qualifiedName + " in " + model.path +
              " (first declared in " + models[index.types_[it->second].fileIndex].path + ")");
        }
      }
      for (const MethodEntry& me : e.methods) {
        if (me.deprecated && !e.qualifiedName.empty()) {
          index.deprecated_.emplace(e.qualifiedName, me.signature);
        }
      }
      index.by_position_[{f, t}] = id;
      scope.types.push_back(id);
      index.types_.push_back(std::move(e));
    }
  }

  // Supertype edges, rejecting any edge that would close a cycle.
  for (TypeId id = 0; id < index.types_.size(); ++id) {
    const TypeEntry& entry = index.types_[id];
    const TypeFact& fact = models[entry.fileIndex].types[entry.typeIndex];
    std::vector<std::string> written;
    if (fact.superclass) written.push_back(*fact.superclass);
    written.insert(written.end(), fact.interfaces.begin(),
                   fact.interfaces.end());
    for (const std::string& w : written) {
      SupertypeRef ref;
      ref.written = w;
      std::optional<TypeId> target =
          index.ResolveWritten(entry.fileIndex, entry.outer, w);
      if (target) {
        bool cycle = *target == id;
        if (!cycle) {
          for (TypeId a : index.Ancestors(*target)) cycle = cycle || a == id;
        }
        if (cycle) {
          index.diagnostics_.push_back(
              "inheritance cycle through " + w + " rejected in " +
              models[entry.fileIndex].path);
          target.reset();
        }
      }
      ref.target = target;
      index.types_[id].supertypes.push_back(std::move(ref));
    }
  }
  return index;
}

std::optional<TypeId> ProjectIndex::FindQualified(
    std::string_view qualified_name) const {
  auto it = by_qualified_.find(qualified_name);
  if (it == by_qualified_.end()) return std::nullopt;
  return it->second;
}

std::optional<TypeId> ProjectIndex::TypeOf(std::size_t file_index,
                                           std::size_t type_index) const {
  auto it = by_position_.find({file_index, type_index});
  if (it == by_position_.end()) return std::nullopt;
  return it->second;
}

std::optional<TypeId> ProjectIndex::ResolveTypeName(
    std::size_t file_index, std::size_t type_index,
    std::string_view written) const {
  if (file_index >= scopes_.size()) return std::nullopt;
  return ResolveWritten(file_index, TypeOf(file_index, type_index), written);
}

std::optional<TypeId> ProjectIndex::ResolveSimple(
    std::size_t file_index, std::optional<TypeId> context,
    std::string_view name) const {
  const FileScope& scope = scopes_[file_index];
  // Type variables shadow everything else.
  for (std::optional<TypeId> cur = context; cur; cur = types_[*cur].outer) {
    const auto& tp = types_[*cur].typeParams;
    if (std::find(tp.begin(), tp.end(), name) != tp.end()) return std::nullopt;
  }
  for (std::optional<TypeId> cur = context; cur; cur = types_[*cur].outer) {
    if (types_[*cur].simpleName == name) return cur;
    for (TypeId t : scope.types) {
      if (types_[t].outer == cur && types_[t].simpleName == name) return t;
    }
  }
  for (TypeId t : scope.types) {
    if (!types_[t].outer && types_[t].simpleName == name) return t;
  }
  for (TypeId t : scope.types) {
    if (types_[t].isLocal && types_[t].simpleName == name) return t;
  }
  if (auto it = scope.imports.find(name); it != scope.imports.end()) {
    if (auto t = FindQualified(it->second)) return t;
    return std::nullopt;
  }
  std::string in_package =
      scope.package.empty() ? std::string(name)
                            : scope.package + "." + std::string(name);
  if (auto t = FindQualified(in_package)) return t;
  for (const std::string& pkg : scope.wildcards) {
    if (auto t = FindQualified(pkg + "." + std::string(name))) return t;
  }
  return std::nullopt;
}

std::optional<TypeId> ProjectIndex::ResolveWritten(
    std::size_t file_index, std::optional<TypeId> context,
    std::string_view written) const {
  if (written.empty() || written.find('[') != std::string_view::npos) {
    return std::nullopt;
  }
  if (written.find('.') == std::string_view::npos) {
    return ResolveSimple(file_index, context, written);
  }
  std::string head = Head(written);
  if (auto first = ResolveSimple(file_index, context, head)) {
    const std::string& q = types_[*first].qualifiedName;
    if (q.empty()) return std::nullopt;
    return FindQualified(q + std::string(written.substr(head.size())));
  }
  return FindQualified(written);
}

std::vector<TypeId> ProjectIndex::Ancestors(TypeId id,
                                            bool* saw_external) const {
  std::vector<TypeId> out;
  std::vector<bool> seen(types_.size(), false);
  std::deque<TypeId> queue = {id};
  seen[id] = true;
  bool external = false;
  while (!queue.empty()) {
    TypeId cur = queue.front();
    queue.pop_front();
    for (const SupertypeRef& ref : types_[cur].supertypes) {
      if (!ref.target) {
        external = true;
        continue;
      }
      if (seen[*ref.target]) continue;
      seen[*ref.target] = true;
      out.push_back(*ref.target);
      queue.push_back(*ref.target);
    }
  }
  if (saw_external) *saw_external = external;
  return out;
}

std::vector<std::string> ProjectIndex::Hierarchy(TypeId id) const {
  std::vector<std::string> out;
  for (const SupertypeRef& ref : types_[id].supertypes) {
    out.push_back(ref.target ? types_[*ref.target].qualifiedName : ref.written);
  }
  out.emplace_back(kObject);
  return out;
}

OverrideResolution ResolveOverride(const ProjectIndex& index,
                                   std::size_t file_index,
                                   std::size_t type_index,
                                   const MemberFact& method) {
  OverrideResolution r;
  if (method.kind != MemberKind::kInstanceMethod ||
      method.visibility == Visibility::kPrivate) {
    return r;
  }
  std::optional<TypeId> owner = index.TypeOf(file_index, type_index);
  if (!owner) {
    r.parentResolved = false;
    return r;
  }
  MethodSignature sig = MethodSignature::Of(method);
  bool saw_external = false;
  bool uncertain = false;
  for (TypeId a : index.Ancestors(*owner, &saw_external)) {
    for (const MethodEntry& me : index.types()[a].methods) {
      if (me.isStatic || me.isPrivate) continue;
      if (me.signature == sig) {
        r.overrides = true;
        r.parentDeprecated = me.deprecated;
        return r;
      }
      if (me.signature.name == sig.name && me.signature.arity == sig.arity &&
          me.usesTypeVariable) {
        uncertain = true;
      }
    }
  }
  if (IsObjectMethod(sig)) {
    r.overrides = true;
    // Object.finalize() carries @Deprecated.
    r.parentDeprecated = sig.name == "finalize";
    return r;
  }
  r.parentResolved = !(saw_external || uncertain);
  return r;
}

StaticAccessResolution ResolveStaticAccess(const ProjectIndex& index,
                                           std::size_t file_index,
                                           std::size_t type_index,
                                           const AccessFact& access) {
  StaticAccessResolution r;
  r.qualifiedCorrectly = access.receiverForm == ReceiverForm::kClassName;
  if (access.receiverForm == ReceiverForm::kImplicit ||
      !access.receiverTypeName) {
    return r;
  }
  std::optional<TypeId> target =
      index.ResolveTypeName(file_index, type_index, *access.receiverTypeName);
  if (!target) return r;
  std::vector<TypeId> chain = {*target};
  bool saw_external = false;
  for (TypeId a : index.Ancestors(*target, &saw_external)) chain.push_back(a);
  bool is_static = false;
  bool is_instance = false;
  for (TypeId t : chain) {
    is_static = is_static || index.types()[t].staticMembers.count(
                                 access.memberName) > 0;
    is_instance = is_instance || index.types()[t].instanceMembers.count(
                                     access.memberName) > 0;
  }
  // A same-named instance member makes the access ambiguous.
  if (is_static && !is_instance) {
    r.isStaticMember = true;
    r.resolved = true;
  }
  return r;
}

}  // namespace jstyle
