"""
Report-Tabellen als Excel-Arbeitsmappe

Eine ReportTable pro Sheet, gleiche Zeilen und Spalten wie die TSV-Ausgabe.
Die Provenienz-Zeile steht über jeder Tabelle.
"""
import logging
from io import BytesIO
from pathlib import Path
from typing import Optional, Sequence

from .reports import ReportTable

logger = logging.getLogger(__name__)

SHEET_TITLE_MAX = 31
INVALID_SHEET_CHARS = set('[]:*?/\\')


def sheet_title(title: str, taken: set) -> str:
    """Excel-taugliche, eindeutige Sheet-Namen"""
    base = "".join("_" if ch in INVALID_SHEET_CHARS else ch for ch in title)[:SHEET_TITLE_MAX]
    base = base or "table"
    name, counter = base, 2
    while name.lower() in taken:
        suffix = f"_{counter}"
        name = base[:SHEET_TITLE_MAX - len(suffix)] + suffix
        counter += 1
    taken.add(name.lower())
    return name


class ReportExcelExporter:
    """Schreibt ReportTables mit Kopfzeilen- und Summen-Formatierung."""

    def __init__(self):
        self._setup_styles()

    def _setup_styles(self):
        from openpyxl.styles import Alignment, Border, Font, PatternFill, Side

        self.title_font = Font(size=9, italic=True, color="666666")

        self.header_font = Font(bold=True, color="FFFFFF", size=11)
        self.header_fill = PatternFill(start_color="1F4E79", end_color="1F4E79", fill_type="solid")
        self.header_align = Alignment(horizontal="center", vertical="center")

        self.data_font = Font(size=10)
        self.number_align = Alignment(horizontal="right")

        self.thin_border = Border(
            left=Side(style="thin", color="B4B4B4"),
            right=Side(style="thin", color="B4B4B4"),
            top=Side(style="thin", color="B4B4B4"),
            bottom=Side(style="thin", color="B4B4B4"),
        )

        # Footer-Zeilen (F-Kombinationen, Mittelwerte)
        self.sum_font = Font(bold=True, size=10)
        self.sum_fill = PatternFill(start_color="FFF2CC", end_color="FFF2CC", fill_type="solid")

    def export(self, tables: Sequence[ReportTable], header: Optional[str] = None) -> BytesIO:
        from openpyxl import Workbook

        wb = Workbook()
        wb.remove(wb.active)
        taken: set = set()
        for table in tables:
            ws = wb.create_sheet(sheet_title(table.title, taken))
            self._write_table(ws, table, header)

        output = BytesIO()
        wb.save(output)
        output.seek(0)
        return output

    def save(self, tables: Sequence[ReportTable], path: Path, header: Optional[str] = None) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(self.export(tables, header).getvalue())
        logger.info("Wrote workbook %s (%d sheets)", path, len(tables))
        return path

    def _write_table(self, ws, table: ReportTable, header: Optional[str]):
        from openpyxl.utils import get_column_letter

        row = 1
        if header:
            ws.cell(row=1, column=1, value=header.lstrip("# ")).font = self.title_font
            row = 3

        for col, name in enumerate(table.columns, 1):
            cell = ws.cell(row=row, column=col, value=name)
            cell.font = self.header_font
            cell.fill = self.header_fill
            cell.alignment = self.header_align
            cell.border = self.thin_border
            ws.column_dimensions[get_column_letter(col)].width = max(12, len(name) + 4)

        for index, values in enumerate(table.rows):
            row += 1
            footer = index >= table.footer_start
            for col, value in enumerate(values, 1):
                cell = ws.cell(row=row, column=col, value=self._cell_value(value))
                cell.border = self.thin_border
                cell.font = self.sum_font if footer else self.data_font
                if footer:
                    cell.fill = self.sum_fill
                if isinstance(value, float):
                    cell.number_format = "0.0000"
                    cell.alignment = self.number_align
        ws.freeze_panes = ws.cell(row=(3 if header else 1) + 1, column=1)

    @staticmethod
    def _cell_value(value):
        # undefined metrics: same marker as in the TSV files
        if value is None:
            return "NA"
        if isinstance(value, bool):
            return str(value).lower()
        return value
