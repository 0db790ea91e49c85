#include "cbel/cli.hpp"

int main(int argc, char** argv) {
    return cbel::cli::run({argv + 1, argv + argc});
}
