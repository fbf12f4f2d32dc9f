// Regenerates the shipped data files (catalog.dat, bigroots.dat) from the
// formula and constructor paths. The checked-in files are the artifact; the
// loaders re-verify them against these same paths on every run, so a stale
// or hand-edited file fails loudly.

#include <fstream>
#include <iostream>

#include "ckf/catalog.hpp"
#include "ckf/restriction.hpp"

int main(int argc, char** argv) {
  std::string out_dir = argc > 1 ? argv[1] : "data";
  {
    std::ofstream f(out_dir + "/catalog.dat");
    f << ckf::serialize_catalog(ckf::default_catalog_records());
  }
  {
    std::vector<ckf::BigRootModel> models;
    for (const auto& name : ckf::shipped_bigroot_models())
      models.push_back(ckf::bigroot_model_by_name(name));
    std::ofstream f(out_dir + "/bigroots.dat");
    f << ckf::serialize_bigroots(models);
  }
  std::cout << "wrote " << out_dir << "/catalog.dat and " << out_dir
            << "/bigroots.dat\n";
  return 0;
}
