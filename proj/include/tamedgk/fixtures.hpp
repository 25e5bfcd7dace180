#pragma once

#include <string>
#include <vector>

namespace tgk {

// The shipped example structure files, embedded so the CLI can emit them.
struct FixtureFile {
  std::string name;
  std::string text;
};

const std::vector<FixtureFile>& builtin_examples();
const std::string* find_example(const std::string& name);

}  // namespace tgk
