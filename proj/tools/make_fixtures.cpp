#include <filesystem>
#include <iostream>
#include <string>

#include "charta/builders.hpp"
#include "charta/hopf.hpp"
#include "charta/json_io.hpp"
#include "charta/modular.hpp"

// Regenerates the committed data/ fixtures from the builders module.
int main(int argc, char** argv) {
    using namespace charta;
    const std::string dir = argc > 1 ? argv[1] : "data";
    try {
        std::filesystem::create_directories(dir);
        int count = 0;
        Fixtures fx = fixtures();
        for (const auto& [name, ring] : fx.rings) {
            save_json_file(dir + "/" + name + ".json", fusion_ring_to_json(ring));
            ++count;
        }
        for (const auto& [name, m] : fx.modular) {
            save_json_file(dir + "/" + name + "_modular.json", modular_to_json(m));
            ++count;
        }
        for (const auto& [name, c] : fx.cayley) {
            save_json_file(dir + "/" + name + "_cayley.json", cayley_to_json(c));
            ++count;
        }
        for (const auto& [name, h] : fx.hopf) {
            save_json_file(dir + "/" + name + ".json", hopf_to_json(h));
            ++count;
        }
        std::cout << "wrote " << count << " fixture files to " << dir << "\n";
    } catch (const std::exception& e) {
        std::cerr << "make_fixtures: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
