# fixture program 048
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


def main():
    sequence_items = ['first', 'second', 'third']
    handle = io.StringIO('Winter saddle bridge rocket rocket wizard vector')
    handle.seek(0)
    first_line = handle.readline()
    input_files = ['data/market_22.json', 'output/yellow_89.json', 'logs/falcon_66.txt']
    for element in input_files:
        print(os.path.basename(element))
    cached_value = None
    if cached_value is None:
        print('empty')
    cached_value = None
    model = LinearModel(10)
    print(type(model).__name__)
    prediction = model.predict([1, 2, 3])
    session_id = 95021
    lookup_key = str(session_id)
    print('id', session_id)
    title = 'Island rocket needle violet'
    title = title.strip()
    title = 'Matrix matrix apple python pepper ocean vector'
    list_of_numbers = []
    total = sum(list_of_numbers)
    account_balance = decimal.Decimal('5901.06')
    print('balance', account_balance)
    output_dir = pathlib.Path('out/butter')
    print(output_dir.name)
    output_dir = pathlib.Path('out/jungle')
    labels = ['market', 'saddle', 'jungle', 'report', 'report', 'meadow', 'cloud', 'jungle']
    print(', '.join(labels))
    for element in labels:
        print(element)
    for loop_round in range(4):
        batch_size = 4096
        print(batch_size)


main()
