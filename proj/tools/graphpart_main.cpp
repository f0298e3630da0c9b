#include "graphpart/cli.hpp"

int main(int argc, char** argv) {
    return graphpart::run_cli({argv + 1, argv + argc});
}
