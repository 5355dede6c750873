namespace tripack {}
