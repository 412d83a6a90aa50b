// Writes the analytic dihedral character tables shipped in data/chartables/.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "reflekt/factor.hpp"

int main(int argc, char** argv) {
  const std::filesystem::path out = argc > 1 ? argv[1] : "data/chartables";
  std::filesystem::create_directories(out);
  for (unsigned m : {4u, 6u}) {
    const auto path = out / ("I2_" + std::to_string(m) + ".json");
    std::ofstream(path) << reflekt::character_table_to_json(reflekt::dihedral_character_table(m)) << "\n";
    std::cout << path.string() << "\n";
  }
}
