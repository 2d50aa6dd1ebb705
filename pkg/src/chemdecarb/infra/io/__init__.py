"""Output table and JSON-lines persistence."""

from chemdecarb.infra.io.tables import read_json_lines, read_table, read_units, write_json_lines, write_table

__all__ = ["read_json_lines", "read_table", "read_units", "write_json_lines", "write_table"]
