#include "svlab/acceptance.hpp"

int main() {
    return svlab::print_acceptance_report(svlab::run_acceptance()) ? 0 : 1;
}
