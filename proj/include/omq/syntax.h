#pragma once

#include <string>
#include <vector>

#include "omq/kernel.h"

namespace omq {

Ontology parse_ontology(const std::string& text);
Database parse_database(const std::string& text);
UCQ parse_query(const std::string& text);
std::vector<TGD> parse_tgds(const std::string& text);
CPtr parse_concept(const std::string& text);

std::string print_ontology(const Ontology& o);
std::string print_database(const Database& d);
std::string print_cq(const CQ& q, const std::string& head = "q");
std::string print_query(const UCQ& q);
std::string print_tgds(const std::vector<TGD>& ts);

std::string read_file(const std::string& path);

}  // namespace omq
