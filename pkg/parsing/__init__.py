"""Parser, abstract syntax tree and AST renderers."""
