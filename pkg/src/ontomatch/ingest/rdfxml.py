"""RDF/XML subset parser built on xml.sax.

Implements the striped node/property-element interpretation: elements
alternate between resource descriptions and predicates as the tree
nests. Supported syntax: rdf:about / rdf:ID / rdf:nodeID subjects,
typed node elements, rdf:resource objects, nested node elements,
rdf:parseType="Resource" and "Collection", rdf:datatype, property
attributes, scoped xml:base and xml:lang, and rdf:li expansion.

rdf:parseType="Literal" content is flattened to its text (with a
warning); reification via rdf:ID on property elements is ignored
(with a warning). Relative IRIs need an in-scope xml:base.
"""

from __future__ import annotations

import re
import xml.sax
from urllib.parse import urljoin
from xml.sax import handler

from ..errors import ParseError
from .terms import (
    BNode,
    Literal,
    RDF_FIRST,
    RDF_NIL,
    RDF_NS,
    RDF_REST,
    RDF_TYPE,
    Triple,
    XML_NS,
)

_ABSOLUTE_IRI_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")

_RDF_SYNTAX_ATTRS = {
    (RDF_NS, "about"),
    (RDF_NS, "ID"),
    (RDF_NS, "nodeID"),
    (RDF_NS, "resource"),
    (RDF_NS, "datatype"),
    (RDF_NS, "parseType"),
}


class _NodeFrame:
    __slots__ = ("subject", "synthetic", "li_counter")

    def __init__(self, subject, synthetic=False):
        self.subject = subject
        self.synthetic = synthetic
        self.li_counter = 0


class _PropFrame:
    __slots__ = ("subject", "predicate", "line", "object", "text", "datatype",
                 "lang", "collection", "is_collection", "xml_literal")

    def __init__(self, subject, predicate, line, lang):
        self.subject = subject
        self.predicate = predicate
        self.line = line
        self.object = None
        self.text: list[str] = []
        self.datatype: str | None = None
        self.lang = lang
        self.collection: list = []
        self.is_collection = False
        self.xml_literal = False


class _Handler(handler.ContentHandler):
    def __init__(self, source: str):
        super().__init__()
        self.source = source
        self.triples: list[Triple] = []
        self.warnings: list[tuple[int, str]] = []
        self.frames: list = []
        self.base_stack: list[str | None] = [None]
        self.lang_stack: list[str | None] = [None]
        self.saw_rdf_root = False
        self._bnode_seq = 0
        self._locator = None

    # helpers -------------------------------------------------------------

    def setDocumentLocator(self, locator):
        self._locator = locator

    @property
    def line(self) -> int:
        return self._locator.getLineNumber() if self._locator else 0

    def error_out(self, message: str) -> ParseError:
        return ParseError(message, self.line, self.source)

    def fresh_bnode(self) -> BNode:
        self._bnode_seq += 1
        return BNode(f"xgen{self._bnode_seq}")

    def resolve(self, ref: str) -> str:
        if _ABSOLUTE_IRI_RE.match(ref):
            return ref
        base = self.base_stack[-1]
        if base is None:
            raise self.error_out(f"relative IRI '{ref}' with no xml:base in scope")
        return urljoin(base, ref)

    @staticmethod
    def element_iri(name: tuple) -> str:
        uri, local = name
        if uri is None:
            return local
        return uri + local

    # SAX events ----------------------------------------------------------

    def startElementNS(self, name, qname, attrs):
        base = self.base_stack[-1]
        lang = self.lang_stack[-1]
        new_base = attrs.get((XML_NS, "base"))
        if new_base is not None:
            # xml:base may itself be relative to the outer base
            base = new_base if _ABSOLUTE_IRI_RE.match(new_base) else (
                urljoin(self.base_stack[-1], new_base)
                if self.base_stack[-1]
                else None
            )
            if base is None:
                raise self.error_out("relative xml:base with no outer base")
            base = base.split("#", 1)[0]
        new_lang = attrs.get((XML_NS, "lang"))
        if new_lang is not None:
            lang = new_lang.lower() or None
        self.base_stack.append(base)
        self.lang_stack.append(lang)

        if not self.frames:
            if name == (RDF_NS, "RDF"):
                self.saw_rdf_root = True
                self.frames.append("toplevel")
                return
            self._start_node(name, attrs)
            return
        top = self.frames[-1]
        if top == "toplevel" or isinstance(top, _PropFrame):
            if name == (RDF_NS, "RDF"):
                raise self.error_out("nested rdf:RDF element")
            self._start_node(name, attrs)
        else:
            self._start_property(name, attrs)

    def _start_node(self, name, attrs):
        about = attrs.get((RDF_NS, "about"))
        rdf_id = attrs.get((RDF_NS, "ID"))
        node_id = attrs.get((RDF_NS, "nodeID"))
        if sum(x is not None for x in (about, rdf_id, node_id)) > 1:
            raise self.error_out(
                "rdf:about, rdf:ID and rdf:nodeID are mutually exclusive"
            )
        if about is not None:
            subject = self.resolve(about)
        elif rdf_id is not None:
            subject = self.resolve("#" + rdf_id)
        elif node_id is not None:
            subject = BNode(node_id)
        else:
            subject = self.fresh_bnode()

        line = self.line
        elem_iri = self.element_iri(name)
        if name != (RDF_NS, "Description"):
            self.triples.append(Triple(subject, RDF_TYPE, elem_iri, line))

        for attr_name in attrs.getNames():
            if attr_name in _RDF_SYNTAX_ATTRS or attr_name[0] == XML_NS:
                continue
            if attr_name[0] is None:
                self.warnings.append(
                    (line, f"ignoring unqualified attribute '{attr_name[1]}'")
                )
                continue
            self.triples.append(
                Triple(
                    subject,
                    self.element_iri(attr_name),
                    Literal(attrs.get(attr_name), self.lang_stack[-1], None),
                    line,
                )
            )

        parent = self.frames[-1] if self.frames else None
        if isinstance(parent, _PropFrame):
            if parent.is_collection:
                parent.collection.append((subject, line))
            elif parent.object is not None:
                raise self.error_out("property element with multiple objects")
            else:
                parent.object = subject
        self.frames.append(_NodeFrame(subject))

    def _start_property(self, name, attrs):
        node: _NodeFrame = self.frames[-1]
        line = self.line
        if name == (RDF_NS, "li"):
            node.li_counter += 1
            predicate = f"{RDF_NS}_{node.li_counter}"
        else:
            predicate = self.element_iri(name)
        prop = _PropFrame(node.subject, predicate, line, self.lang_stack[-1])

        if attrs.get((RDF_NS, "ID")) is not None:
            self.warnings.append((line, "reification via rdf:ID is ignored"))

        resource = attrs.get((RDF_NS, "resource"))
        node_id = attrs.get((RDF_NS, "nodeID"))
        parse_type = attrs.get((RDF_NS, "parseType"))
        prop.datatype = attrs.get((RDF_NS, "datatype"))
        if prop.datatype is not None:
            prop.datatype = self.resolve(prop.datatype)

        extra_attrs = [
            a
            for a in attrs.getNames()
            if a not in _RDF_SYNTAX_ATTRS and a[0] not in (XML_NS, None)
            and a != (RDF_NS, "ID")
        ]
        if extra_attrs:
            self.warnings.append(
                (line, "property attributes on a property element are ignored")
            )

        self.frames.append(prop)
        if resource is not None:
            prop.object = self.resolve(resource)
        elif node_id is not None:
            prop.object = BNode(node_id)
        elif parse_type == "Resource":
            inner = self.fresh_bnode()
            prop.object = inner
            self.frames.append(_NodeFrame(inner, synthetic=True))
        elif parse_type == "Collection":
            prop.is_collection = True
        elif parse_type == "Literal":
            prop.xml_literal = True
            self.warnings.append(
                (line, "rdf:parseType='Literal' content flattened to text")
            )
        elif parse_type is not None:
            raise self.error_out(f"unsupported rdf:parseType '{parse_type}'")

    def characters(self, content):
        if not self.frames:
            return
        top = self.frames[-1]
        if isinstance(top, _PropFrame):
            top.text.append(content)
        elif isinstance(top, _NodeFrame) and content.strip():
            raise self.error_out("unexpected text content in node element")

    def endElementNS(self, name, qname):
        self.base_stack.pop()
        self.lang_stack.pop()
        top = self.frames.pop()
        if top == "toplevel":
            return
        if isinstance(top, _NodeFrame):
            if not top.synthetic:
                return
            # synthetic frames (parseType="Resource") close with their
            # owning property element
            top = self.frames.pop()
        self._finish_property(top)

    def _finish_property(self, prop: _PropFrame):
        text = "".join(prop.text)
        if prop.is_collection:
            if text.strip():
                raise self.error_out("text content in parseType='Collection'")
            obj = self._build_collection(prop.collection)
        elif prop.object is not None:
            if text.strip():
                raise self.error_out(
                    "property element mixes a resource object with text"
                )
            obj = prop.object
        else:
            if prop.xml_literal:
                obj = Literal(text, None, RDF_NS + "XMLLiteral")
            elif prop.datatype is not None:
                obj = Literal(text, None, prop.datatype)
            else:
                obj = Literal(text, prop.lang, None)
        self.triples.append(Triple(prop.subject, prop.predicate, obj, prop.line))

    def _build_collection(self, items):
        if not items:
            return RDF_NIL
        head = self.fresh_bnode()
        node = head
        for idx, (item, line) in enumerate(items):
            self.triples.append(Triple(node, RDF_FIRST, item, line))
            if idx + 1 < len(items):
                nxt = self.fresh_bnode()
                self.triples.append(Triple(node, RDF_REST, nxt, line))
                node = nxt
            else:
                self.triples.append(Triple(node, RDF_REST, RDF_NIL, line))
        return head


def parse_rdfxml(
    data: bytes | str, source: str = "<input>"
) -> tuple[list[Triple], list[tuple[int, str]]]:
    """Parse an RDF/XML document into triples plus parser warnings."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    h = _Handler(source)
    parser = xml.sax.make_parser()
    parser.setFeature(handler.feature_namespaces, True)
    parser.setContentHandler(h)
    try:
        from io import BytesIO

        parser.parse(BytesIO(data))
    except xml.sax.SAXParseException as exc:
        raise ParseError(
            exc.getMessage(), exc.getLineNumber() or 0, source
        ) from exc
    return h.triples, h.warnings
