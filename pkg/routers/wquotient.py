from fastapi import APIRouter, HTTPException, Query

import config
from lie.exceptions import FastLieError
from reports import ReportDocument, wgraded_report

router = APIRouter()

@router.get("/graded", response_model=ReportDocument)
async def get_graded_pieces(max_level: int = Query(6, ge=1, le=config.MAX_WITT_DEGREE)):
    """W 的分次块：维数、基词与特征"""
    try:
        return wgraded_report(max_level)
    except FastLieError as e:
        raise HTTPException(status_code=400, detail=str(e))
