#!/usr/bin/env python3
"""
Report generation module for the Pascal geometry toolkit
Converts markdown verification summaries to Word documents
"""

import io
import re
from datetime import datetime
from typing import Iterable, Optional

from docx import Document
from docx.enum.text import WD_ALIGN_PARAGRAPH
from docx.shared import Pt, RGBColor

from utils.helpers import safe_log

VERDICT_COLORS = {
    'PASS': RGBColor(39, 174, 96),
    'FAIL': RGBColor(231, 76, 60),
}

# Fixed so that reruns only differ in the zip container timestamps
REPORT_TIMESTAMP = datetime(2000, 1, 1)


class WordReportGenerator:
    """Converts markdown verification summaries to formatted Word documents"""

    def __init__(self):
        safe_log("WordReportGenerator initialized", "DEBUG")

    def generate_report(self, markdown_content: str, title: str = "Pascal Verification Report",
                        subject: Optional[str] = None) -> bytes:
        """
        Generate Word document from markdown content

        Args:
            markdown_content: Markdown produced by SuiteReport.to_markdown (one or more suites)
            title: Document title
            subject: Document subject property

        Returns:
            Word document as bytes
        """
        try:
            safe_log(f"Generating Word report ({len(markdown_content):,} characters)")
            doc = Document()
            self._setup_document(doc, title, subject)
            self._parse_markdown_content(doc, markdown_content)
            self._add_footer(doc, title)

            doc_buffer = io.BytesIO()
            doc.save(doc_buffer)
            doc_buffer.seek(0)
            safe_log("Word document generation successful")
            return doc_buffer.getvalue()

        except Exception as e:
            safe_log(f"Word generation error: {e}", "ERROR")
            return self._create_error_document(str(e))

    def _setup_document(self, doc: Document, title: str, subject: Optional[str]):
        properties = doc.core_properties
        properties.title = title
        properties.author = "pascal-geometry"
        properties.subject = subject or "Verification of incidence theorems"
        properties.category = "Verification Report"
        properties.created = REPORT_TIMESTAMP
        properties.modified = REPORT_TIMESTAMP

        normal_style = doc.styles['Normal']
        normal_style.font.name = 'Calibri'
        normal_style.font.size = Pt(11)
        normal_style.paragraph_format.space_after = Pt(6)

        paragraph = doc.add_paragraph(title)
        paragraph.style = 'Title'

    def _parse_markdown_content(self, doc: Document, markdown_content: str):
        """Headings, bold-label paragraphs and PASS/FAIL bullets"""
        for line in (raw.strip() for raw in markdown_content.split('\n')):
            if not line:
                continue
            if line.startswith('# '):
                doc.add_paragraph(line[2:], style='Heading 1')
            elif line.startswith('## '):
                doc.add_paragraph(line[3:], style='Heading 1')
            elif line.startswith('### '):
                doc.add_paragraph(line[4:], style='Heading 2')
            elif line.startswith('- '):
                paragraph = doc.add_paragraph(style='List Bullet')
                self._add_formatted_text_to_paragraph(paragraph, line[2:])
            elif line.startswith('---'):
                paragraph = doc.add_paragraph('_' * 50)
                paragraph.alignment = WD_ALIGN_PARAGRAPH.CENTER
                paragraph.runs[0].font.color.rgb = RGBColor(192, 192, 192)
            else:
                paragraph = doc.add_paragraph()
                self._add_formatted_text_to_paragraph(paragraph, line)

    def _add_formatted_text_to_paragraph(self, paragraph, text: str):
        """Add text with embedded bold spans; PASS and FAIL verdicts are coloured"""
        for part in re.split(r'(\*\*.*?\*\*)', text):
            if part.startswith('**') and part.endswith('**') and len(part) > 4:
                inner = part[2:-2]
                run = paragraph.add_run(inner)
                run.bold = True
                color = VERDICT_COLORS.get(inner)
                if color is not None:
                    run.font.color.rgb = color
            elif part:
                run = paragraph.add_run(part)
                color = VERDICT_COLORS.get(part.strip())
                if color is not None:
                    run.bold = True
                    run.font.color.rgb = color

    def _add_footer(self, doc: Document, title: str):
        try:
            footer_para = doc.sections[0].footer.paragraphs[0]
            footer_para.text = title
            footer_para.alignment = WD_ALIGN_PARAGRAPH.CENTER
            footer_para.style.font.size = Pt(9)
            footer_para.style.font.color.rgb = RGBColor(127, 140, 141)
        except Exception as e:
            safe_log(f"Could not add footer: {e}", "WARNING")

    def _create_error_document(self, error_message: str) -> bytes:
        try:
            doc = Document()
            doc.add_heading('Report Generation Error', 0)
            doc.add_paragraph(f'Failed to generate report: {error_message}')
            doc_buffer = io.BytesIO()
            doc.save(doc_buffer)
            return doc_buffer.getvalue()
        except Exception:
            return b"Error creating Word document"


# Convenience function for external use
def generate_word_report(markdown_sections: Iterable[str], title: str = "Pascal Verification Report") -> bytes:
    """
    Generate one Word document from the markdown of several suite reports

    Args:
        markdown_sections: Markdown summaries, one per suite
        title: Document title

    Returns:
        Word document as bytes
    """
    return WordReportGenerator().generate_report("\n---\n".join(markdown_sections), title)
