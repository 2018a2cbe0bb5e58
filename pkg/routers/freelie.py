from fastapi import APIRouter, HTTPException, Query
from typing import List
from pydantic import BaseModel

import config
from lie.exceptions import FastLieError
from lie.freelie import rewrite_to_basis
from reports import ReportDocument, basis_report, witt_report

router = APIRouter()

class RewriteRequest(BaseModel):
    expression: str
    truncation_degree: int = 8

class TermResponse(BaseModel):
    word: str
    bracketing: str
    coefficient: str

class RewriteResponse(BaseModel):
    expression: str
    truncation_degree: int
    terms: List[TermResponse]
    pretty: str

@router.get("/witt", response_model=ReportDocument)
async def get_witt_dimensions(max_degree: int = Query(10, ge=1, le=config.MAX_WITT_DEGREE)):
    """n = 1..max_degree 的 Witt 维数"""
    try:
        return witt_report(max_degree)
    except FastLieError as e:
        raise HTTPException(status_code=400, detail=str(e))

@router.get("/basis/{degree}", response_model=ReportDocument)
async def get_basis(degree: int):
    try:
        return basis_report(degree)
    except FastLieError as e:
        raise HTTPException(status_code=400, detail=str(e))

@router.post("/rewrite", response_model=RewriteResponse)
async def rewrite_expression(request: RewriteRequest):
    """把括号表达式改写到 Lyndon 基"""
    if request.truncation_degree < 1:
        raise HTTPException(status_code=400, detail="截断次数必须 >= 1")
    try:
        element = rewrite_to_basis(request.expression, request.truncation_degree)
    except FastLieError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return {
        "expression": request.expression,
        "truncation_degree": request.truncation_degree,
        "terms": [
            {"word": w.letters, "bracketing": w.bracketing(), "coefficient": str(c)}
            for w, c in element.sorted_terms()
        ],
        "pretty": element.pretty(),
    }
