// Parse a JTON document, inspect it, and write it back in three formats.

#include <iostream>

#include "jton/jton.hpp"

int main() {
  const char* doc = R"(
    // Zen Grid: headers once, one row per line
    {
      team: "platform",
      members: [3: id, name, role;
        1, Alice, lead;
        2, Bob, ;
        3, "Carol D.", reviewer],
      budget: Infinity
    })";

  const jton::Value v = jton::parse_document(doc);
  for (const auto& row : v.find("members")->as_array()) {
    const jton::Value* role = row.find("role");
    std::cout << row.find("name")->as_string() << ": " << (role->is_null() ? "(none)" : role->as_string()) << '\n';
  }

  jton::SerializeOptions compact;
  std::cout << jton::serialize(v, compact) << "\n\n";

  jton::SerializeOptions zen;
  zen.mode = jton::OutputMode::Zen;
  zen.spacing = jton::Spacing::Spaced;
  zen.bare_strings = true;
  zen.implicit_null = true;
  std::cout << jton::serialize(v, zen) << "\n\n";

  jton::SerializeOptions pretty;
  pretty.mode = jton::OutputMode::JsonPretty;
  std::cout << jton::serialize(v, pretty) << '\n';
}
