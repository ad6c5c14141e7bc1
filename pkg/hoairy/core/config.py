TOOL_NAME = "hoairy"
SCHEMA_VERSION = 1

OUTPUT_FORMATS = ("csv", "json", "text", "latex")

CSV_COMMENT_PREFIX = "# "
