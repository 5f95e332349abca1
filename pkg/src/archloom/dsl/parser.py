"""Recursive-descent parser turning one token stream into raw elements and links."""

from __future__ import annotations

from collections.abc import Callable
import logging
from typing import Final

from archloom.dsl.lexer import Token, TokenKind
from archloom.model.diagnostics import Diagnostic
from archloom.model.elements import ArchElement, Link, SourceSpan, join_params
from archloom.model.metamodel import COMPONENT_KIND_TAGS, ElementKind, LinkKind

logger = logging.getLogger(__name__)

TOP_LEVEL_KEYWORDS: Final[frozenset[str]] = frozenset({"process", "service", "component", "class"})
MAX_NESTING: Final[int] = 128


class _SyntaxError(Exception):
    def __init__(self, diagnostic: Diagnostic) -> None:
        self.diagnostic = diagnostic
        super().__init__(diagnostic.message)


class _Scope:
    """Sibling ids declared in one block, for P003."""

    def __init__(self) -> None:
        self.seen: dict[str, SourceSpan] = {}


class Parser:
    """Parses the declarations of one source file.

    Elements and links are appended to ``elements`` / ``links`` in
    declaration order; references are kept by name and resolved later by
    ``build_model``. On a syntax error (P002) the parser skips to the next
    top-level keyword and carries on, so one file yields every error.
    """

    def __init__(self, tokens: list[Token]) -> None:
        self._tokens = tokens
        self._pos = 0
        self._depth = 0
        self.elements: list[ArchElement] = []
        self.links: list[Link] = []
        self.diagnostics: list[Diagnostic] = []

    # ==================== Token helpers ====================

    @property
    def _current(self) -> Token:
        return self._tokens[self._pos]

    def _advance(self) -> Token:
        token = self._tokens[self._pos]
        if token.kind is not TokenKind.EOF:
            self._pos += 1
        return token

    def _peek_kw(self, value: str, offset: int = 0) -> bool:
        index = min(self._pos + offset, len(self._tokens) - 1)
        token = self._tokens[index]
        return token.kind is TokenKind.IDENT and token.value == value

    def _peek(self, kind: TokenKind) -> bool:
        return self._current.kind is kind

    def _error(self, expected: str) -> _SyntaxError:
        token = self._current
        return _SyntaxError(
            Diagnostic.of("P002", f"expected {expected}, found {token.describe()}", span=token.span)
        )

    def _match(self, kind: TokenKind, expected: str | None = None) -> Token:
        if self._current.kind is not kind:
            raise self._error(expected or kind.value)
        return self._advance()

    def _match_kw(self, value: str) -> Token:
        if not self._peek_kw(value):
            raise self._error(f"'{value}'")
        return self._advance()

    def _match_id(self, what: str = "identifier") -> Token:
        return self._match(TokenKind.IDENT, what)

    def _match_string(self, what: str = "string") -> Token:
        return self._match(TokenKind.STRING, what)

    def _ref_list(self, scope_label: str) -> list[Token]:
        refs = [self._match_id("reference")]
        while self._peek(TokenKind.COMMA):
            self._advance()
            refs.append(self._match_id("reference"))
        seen: set[str] = set()
        unique: list[Token] = []
        for ref in refs:
            if ref.value in seen:
                self.diagnostics.append(
                    Diagnostic.of(
                        "P003",
                        f"duplicate reference '{ref.value}' in {scope_label} list",
                        element=ref.value,
                        span=ref.span,
                    )
                )
                continue
            seen.add(ref.value)
            unique.append(ref)
        return unique

    def _id_list(self) -> list[str]:
        self._match(TokenKind.LPAREN)
        names = [self._match_id().value]
        while self._peek(TokenKind.COMMA):
            self._advance()
            names.append(self._match_id().value)
        self._match(TokenKind.RPAREN)
        return names

    def _optional_desc(self) -> str | None:
        if not self._peek(TokenKind.LBRACE):
            return None
        self._advance()
        self._match_kw("desc")
        text = self._match_string().value
        self._match(TokenKind.RBRACE, "'}'")
        return text

    # ==================== Element bookkeeping ====================

    def _declare(
        self,
        scope: _Scope,
        keyword: Token,
        ident: Token,
        kind: ElementKind,
        name: str,
        parent: str | None,
        body: Callable[[], dict[str, str]] | None = None,
    ) -> None:
        """Record an element, parse its body, and roll back if it duplicates a sibling."""
        element_mark, link_mark = len(self.elements), len(self.links)
        duplicate = ident.value in scope.seen
        if duplicate:
            self.diagnostics.append(
                Diagnostic.of(
                    "P003",
                    f"duplicate declaration of '{ident.value}' in the same scope "
                    f"(first declared at {scope.seen[ident.value]})",
                    element=ident.value,
                    span=ident.span,
                )
            )
        else:
            scope.seen[ident.value] = keyword.span

        self.elements.append(ArchElement(id=ident.value, kind=kind, name=name, src=keyword.span))
        if parent is not None:
            self.links.append(
                Link(source=parent, target=ident.value, kind=LinkKind.CONTAINS, src=keyword.span)
            )
        attrs = body() if body is not None else {}
        if attrs:
            declared = self.elements[element_mark]
            self.elements[element_mark] = ArchElement(
                id=declared.id, kind=declared.kind, name=declared.name, attrs=attrs, src=declared.src
            )
        if duplicate:
            del self.elements[element_mark:]
            del self.links[link_mark:]

    def _link(self, source: str, ref: Token, kind: LinkKind) -> None:
        self.links.append(Link(source=source, target=ref.value, kind=kind, src=ref.span))

    def _enter(self) -> None:
        self._depth += 1
        if self._depth > MAX_NESTING:
            raise self._error(f"at most {MAX_NESTING} nested blocks")

    def _leave(self) -> None:
        self._depth -= 1

    # ==================== Grammar ====================

    def parse_file(self) -> None:
        """model := decl*"""
        scope = _Scope()
        while not self._peek(TokenKind.EOF):
            self._depth = 0
            start = self._pos
            try:
                self._parse_declaration(scope)
            except _SyntaxError as error:
                self.diagnostics.append(error.diagnostic)
                self._recover(start)

    def _recover(self, start: int) -> None:
        """Skip to the next top-level keyword. A failed declaration always consumes a token."""
        if self._pos == start:
            self._advance()
        while not self._peek(TokenKind.EOF):
            token = self._current
            if token.kind is TokenKind.IDENT and token.value in TOP_LEVEL_KEYWORDS:
                return
            self._advance()

    def _parse_declaration(self, scope: _Scope) -> None:
        token = self._current
        if token.kind is TokenKind.IDENT:
            if token.value == "process":
                self._parse_process(scope)
                return
            if token.value == "service":
                self._parse_service(scope)
                return
            if token.value == "component":
                self._parse_component(scope)
                return
            if token.value == "class":
                self._parse_class(scope)
                return
        raise self._error("declaration ('process', 'service', 'component' or 'class')")

    def _parse_process(self, scope: _Scope) -> None:
        """process := "process" ID STR "{" bfunc* "}" """
        keyword = self._advance()
        ident = self._match_id()
        name = self._match_string().value

        def body() -> dict[str, str]:
            self._match(TokenKind.LBRACE)
            self._enter()
            inner = _Scope()
            while self._peek_kw("function"):
                self._parse_function(inner, ident.value)
            self._match(TokenKind.RBRACE, "'function' or '}'")
            self._leave()
            return {}

        self._declare(scope, keyword, ident, ElementKind.BUSINESS_PROCESS, name, None, body)

    def _parse_function(self, scope: _Scope, parent: str) -> None:
        """bfunc := "function" ID STR "{" (bfunc | boper)* "}" """
        keyword = self._advance()
        ident = self._match_id()
        name = self._match_string().value

        def body() -> dict[str, str]:
            self._match(TokenKind.LBRACE)
            self._enter()
            inner = _Scope()
            while True:
                if self._peek_kw("function"):
                    self._parse_function(inner, ident.value)
                elif self._peek_kw("operation"):
                    self._parse_operation(inner, ident.value)
                else:
                    break
            self._match(TokenKind.RBRACE, "'function', 'operation' or '}'")
            self._leave()
            return {}

        self._declare(scope, keyword, ident, ElementKind.BUSINESS_FUNCTION, name, parent, body)

    def _parse_operation(self, scope: _Scope, parent: str) -> None:
        """boper := "operation" ID STR ("{" "desc" STR "}")?"""
        keyword = self._advance()
        ident = self._match_id()
        name = self._match_string().value

        def body() -> dict[str, str]:
            desc = self._optional_desc()
            return {"desc": desc} if desc is not None else {}

        self._declare(scope, keyword, ident, ElementKind.BUSINESS_OPERATION, name, parent, body)

    def _parse_service(self, scope: _Scope) -> None:
        """service := "service" ID STR "implements" REF ("," REF)* "{" autofn* dialog* "}" """
        keyword = self._advance()
        ident = self._match_id()
        name = self._match_string().value
        self._match_kw("implements")
        operations = self._ref_list("implements")

        def body() -> dict[str, str]:
            for ref in operations:
                self._link(ident.value, ref, LinkKind.IMPLEMENTS)
            self._match(TokenKind.LBRACE)
            self._enter()
            inner = _Scope()
            while self._peek_kw("autofn"):
                fn_keyword = self._advance()
                fn_ident = self._match_id()
                fn_name = self._match_string().value
                self._declare(
                    inner, fn_keyword, fn_ident, ElementKind.AUTOMATED_FUNCTION, fn_name, ident.value
                )
            while self._peek_kw("dialog"):
                self._parse_dialog(inner, ident.value)
            self._match(TokenKind.RBRACE, "'autofn', 'dialog' or '}'")
            self._leave()
            return {}

        self._declare(scope, keyword, ident, ElementKind.OPERATIONAL_SERVICE, name, None, body)

    def _parse_dialog(self, scope: _Scope, parent: str) -> None:
        """dialog := "dialog" ID STR "{" "form" STR viewfn* "}" """
        keyword = self._advance()
        ident = self._match_id()
        name = self._match_string().value

        def body() -> dict[str, str]:
            self._match(TokenKind.LBRACE)
            self._enter()
            self._match_kw("form")
            form = self._match_string().value
            inner = _Scope()
            while self._peek_kw("viewfn"):
                self._parse_viewfn(inner, ident.value)
            self._match(TokenKind.RBRACE, "'viewfn' or '}'")
            self._leave()
            return {"form": form}

        self._declare(scope, keyword, ident, ElementKind.DIALOG, name, parent, body)

    def _parse_viewfn(self, scope: _Scope, parent: str) -> None:
        """viewfn := "viewfn" ID STR ("covers" REF ("," REF)*)?
        ("flows" "->" (REF | "external" STR))? ("{" "desc" STR "}")?"""
        keyword = self._advance()
        ident = self._match_id()
        name = self._match_string().value

        def body() -> dict[str, str]:
            if self._peek_kw("covers"):
                self._advance()
                for ref in self._ref_list("covers"):
                    self._link(ident.value, ref, LinkKind.COVERS)
            if self._peek_kw("flows"):
                self._advance()
                self._match(TokenKind.ARROW, "'->'")
                if self._peek_kw("external") and self._tokens[self._pos + 1].kind is TokenKind.STRING:
                    self._advance()
                    label = self._advance()
                    self.links.append(
                        Link(
                            source=ident.value,
                            target=label.value,
                            kind=LinkKind.FLOWS_TO,
                            external=True,
                            src=label.span,
                        )
                    )
                else:
                    self._link(ident.value, self._match_id("reference or 'external'"), LinkKind.FLOWS_TO)
            desc = self._optional_desc()
            return {"desc": desc} if desc is not None else {}

        self._declare(scope, keyword, ident, ElementKind.VIEW_FUNCTION, name, parent, body)

    def _parse_component(self, scope: _Scope) -> None:
        """component := "component" ID STR "kind" ("subsystem" | "external") "{" module* "}" """
        keyword = self._advance()
        ident = self._match_id()
        name = self._match_string().value
        self._match_kw("kind")
        tag = self._current
        if tag.kind is not TokenKind.IDENT or tag.value not in COMPONENT_KIND_TAGS:
            raise self._error("'subsystem' or 'external'")
        self._advance()

        def body() -> dict[str, str]:
            self._match(TokenKind.LBRACE)
            self._enter()
            inner = _Scope()
            while self._peek_kw("module"):
                self._parse_realizer(inner, ident.value, ElementKind.MODULE)
            self._match(TokenKind.RBRACE, "'module' or '}'")
            self._leave()
            return {"kind-tag": tag.value}

        self._declare(scope, keyword, ident, ElementKind.COMPONENT, name, None, body)

    def _parse_class(self, scope: _Scope) -> None:
        """class := "class" ID STR "in" REF "{" method* "}" """
        keyword = self._advance()
        ident = self._match_id()
        name = self._match_string().value
        self._match_kw("in")
        owner = self._match_id("component reference")

        def body() -> dict[str, str]:
            self.links.append(
                Link(source=owner.value, target=ident.value, kind=LinkKind.CONTAINS, src=owner.span)
            )
            self._match(TokenKind.LBRACE)
            self._enter()
            inner = _Scope()
            while self._peek_kw("method"):
                self._parse_realizer(inner, ident.value, ElementKind.METHOD)
            self._match(TokenKind.RBRACE, "'method' or '}'")
            self._leave()
            return {}

        self._declare(scope, keyword, ident, ElementKind.CLASS, name, None, body)

    def _parse_realizer(self, scope: _Scope, parent: str, kind: ElementKind) -> None:
        """module|method := KW ID ("params" "(" IDLIST ")")? ("realizes" REF ("," REF)*)?
        ("{" "desc" STR "}")?"""
        keyword = self._advance()
        ident = self._match_id()

        def body() -> dict[str, str]:
            attrs: dict[str, str] = {}
            if self._peek_kw("params"):
                self._advance()
                attrs["params"] = join_params(self._id_list())
            if self._peek_kw("realizes"):
                self._advance()
                for ref in self._ref_list("realizes"):
                    self._link(ident.value, ref, LinkKind.REALIZES)
            desc = self._optional_desc()
            if desc is not None:
                attrs["desc"] = desc
            return attrs

        # Modules and methods carry no display string; the id doubles as the name.
        self._declare(scope, keyword, ident, kind, ident.value, parent, body)
