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

// Build-time helper: embed_file <input> <output.cc> <symbol>
// Emits `const char symbol[]` and `const std::size_t symbol_size` in
// namespace jstyle::internal.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: embed_file <input> <output.cc> <symbol>\n";
    return 2;
  }
  std::ifstream in(argv[1], std::ios::binary);
  if (!in) {
    std::cerr << "embed_file: cannot read " << argv[1] << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string data = buf.str();
  const std::string delim = "jsdata";
  if (data.find(")" + delim + "\"") != std::string::npos) {
    std::cerr << "embed_file: input contains the raw-string delimiter\n";
    return 1;
  }

  std::ofstream out(argv[2], std::ios::binary);
  const std::string sym = argv[3];
  out << "// Generated from " << argv[1] << ". Do not edit.\n"
      << "#include <cstddef>\n\nnamespace jstyle::internal {\n\n"
      << "extern const char " << sym << "[];\n"
      << "extern const std::size_t " << sym << "_size;\n\n"
      << "const char " << sym << "[] =\n";
  constexpr std::size_t kChunk = 8192;
  if (data.empty()) out << "    \"\"";
  for (std::size_t i = 0; i < data.size(); i += kChunk) {
    out << "    R\"" << delim << "(" << data.substr(i, kChunk) << ")" << delim
        << "\"\n";
  }
  out << ";\nconst std::size_t " << sym << "_size = " << data.size()
      << ";\n\n}  // namespace jstyle::internal\n";
  if (!out) {
    std::cerr << "embed_file: cannot write " << argv[2] << "\n";
    return 1;
  }
  return 0;
}
