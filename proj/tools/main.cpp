#include <string>
#include <vector>

#include "ramlift/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ramlift::run_cli(args);
}
