#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
REPORTE PDF DE BENCHMARK
Resume un CSV de `bench` por familia y tamaño: tasa de éxito bajo el límite
de tiempo, factor de reducción mediano y tiempo medio por instancia.
"""

from decimal import Decimal
from io import BytesIO
from pathlib import Path
from typing import Optional, Union

import pandas as pd
from reportlab.lib import colors
from reportlab.lib.enums import TA_CENTER
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import cm
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from utils.formatters import formatear_duracion, formatear_factor

COLOR_PRINCIPAL = '#1f4788'


def cargar_bench(ruta: Union[str, Path]) -> pd.DataFrame:
    """Lee un CSV de bench conservando los ceros a la izquierda de las cadenas de bits"""
    return pd.read_csv(ruta, dtype={"bits": str, "expected_bits": str,
                                    "naive_terms": str, "bss_after_simp": str,
                                    "reduction_factor": str, "probability": str})


def resumen_por_tamano(tabla: pd.DataFrame) -> pd.DataFrame:
    """
    Una fila por (familia, tamaño).

    Returns:
        DataFrame con columnas family, size, instances, successes,
        success_rate, median_reduction, mean_wall_time_s
    """
    columnas = ["family", "size", "instances", "successes", "success_rate",
                "median_reduction", "mean_wall_time_s"]
    if tabla.empty:
        return pd.DataFrame(columns=columnas)
    datos = tabla.copy()
    datos["exito"] = datos["outcome"] == "success"
    datos["factor"] = pd.to_numeric(datos["reduction_factor"], errors="coerce").where(datos["exito"])
    resumen = datos.groupby(["family", "size"], sort=True).agg(
        instances=("outcome", "size"),
        successes=("exito", "sum"),
        median_reduction=("factor", "median"),
        mean_wall_time_s=("wall_time_ms", "mean"),
    ).reset_index()
    resumen["success_rate"] = resumen["successes"] / resumen["instances"]
    resumen["mean_wall_time_s"] = resumen["mean_wall_time_s"] / 1000.0
    return resumen[columnas]


def generar_pdf_bench(tabla: pd.DataFrame, titulo: Optional[str] = None) -> BytesIO:
    """Genera el PDF con la tabla resumen"""
    buffer = BytesIO()
    doc = SimpleDocTemplate(buffer, pagesize=A4, rightMargin=2*cm, leftMargin=2*cm,
                            topMargin=2*cm, bottomMargin=2*cm)

    elementos = []
    styles = getSampleStyleSheet()

    titulo_style = ParagraphStyle(
        'TituloCustom',
        parent=styles['Title'],
        fontSize=16,
        textColor=colors.HexColor(COLOR_PRINCIPAL),
        spaceAfter=10,
        alignment=TA_CENTER
    )

    subtitulo_style = ParagraphStyle(
        'SubtituloCustom',
        parent=styles['Normal'],
        fontSize=12,
        textColor=colors.grey,
        spaceAfter=20,
        alignment=TA_CENTER
    )

    elementos.append(Paragraph(titulo or "SIMULACIÓN FUERTE CLIFFORD+T", titulo_style))
    elementos.append(Paragraph("Resumen de benchmark por familia y tamaño", subtitulo_style))
    elementos.append(Spacer(1, 0.5*cm))

    resumen = resumen_por_tamano(tabla)
    data_tabla = [['Familia', 'Tamaño', 'Instancias', 'Éxitos', 'Tasa', 'Reducción', 'Tiempo medio']]
    for _, fila in resumen.iterrows():
        mediana = fila['median_reduction']
        data_tabla.append([
            fila['family'],
            str(int(fila['size'])),
            str(int(fila['instances'])),
            str(int(fila['successes'])),
            f"{fila['success_rate']:.0%}",
            "N/A" if pd.isna(mediana) else formatear_factor(Decimal(str(mediana))),
            formatear_duracion(float(fila['mean_wall_time_s'])),
        ])

    exitos = int(resumen['successes'].sum()) if not resumen.empty else 0
    data_tabla.append(['TOTALES', '', str(len(tabla)), str(exitos),
                       f"{exitos / len(tabla):.0%}" if len(tabla) else "N/A", '', ''])

    tabla_pdf = Table(data_tabla, colWidths=[3*cm, 1.8*cm, 2.2*cm, 1.8*cm, 1.6*cm, 2.6*cm, 2.8*cm])
    tabla_pdf.setStyle(TableStyle([
        ('BACKGROUND', (0, 0), (-1, 0), colors.HexColor(COLOR_PRINCIPAL)),
        ('TEXTCOLOR', (0, 0), (-1, 0), colors.whitesmoke),
        ('ALIGN', (0, 0), (-1, -1), 'CENTER'),
        ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
        ('FONTSIZE', (0, 0), (-1, 0), 10),
        ('BOTTOMPADDING', (0, 0), (-1, 0), 12),
        ('BACKGROUND', (0, -1), (-1, -1), colors.lightgrey),
        ('FONTNAME', (0, -1), (-1, -1), 'Helvetica-Bold'),
        ('GRID', (0, 0), (-1, -1), 1, colors.black),
        ('FONTSIZE', (0, 1), (-1, -1), 9),
        ('ROWBACKGROUNDS', (0, 1), (-1, -2), [colors.white, colors.HexColor('#f0f0f0')]),
    ]))

    elementos.append(tabla_pdf)
    elementos.append(Spacer(1, 0.5*cm))
    elementos.append(Paragraph(
        "<b>Reducción:</b> términos BSS sin simplificar divididos por las hojas "
        "efectivamente evaluadas (mediana sobre las instancias exitosas).",
        styles['Normal']
    ))

    doc.build(elementos)
    buffer.seek(0)
    return buffer
