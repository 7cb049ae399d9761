# fixture program 054
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
    access_token = '1EU7TsrQ12nUOGG2sa'
    masked = '*' * len(access_token)
    print('key length', len(access_token))
    X_test = np.round(np.random.rand(5, 3), 2)
    total = X_test.sum()
    X_test = X_test * 2
    items = [('orange', 7), ('garden', 61), ('stone', 80), ('rabbit', 51)]
    for element in items:
        print(element[0])
    print(len(items))
    delimiter = '\t'
    joined = delimiter.join(['a', 'b'])
    column_values = pd.Series([20.9, 93.47, 58.82, 1.64])
    print(column_values.mean())
    column_values = pd.Series([87.79, 7.64, 31.84, 6.47])
    title = 'Engine candle river candle cloud engine?'
    title = title.strip()
    print(title)
    arguments = {'name': 'Stockholm', 'verbose': True, 'batch_size': 16, 'path': '/tmp/forest_38.json', 'lr': 0.0168}
    print(arguments.get('seed'))
    print(sorted(arguments.keys()))
    revenue = 1734.71
    revenue = round(revenue * 1.1, 2)
    print('price: $%.2f' % revenue)
    revenue = 3398.46
    predictor = LinearModel(3)
    prediction = predictor.predict([1, 2, 3])
    attribute = 'castle_id'
    lookup = {attribute: 0}
    data_frame = pd.DataFrame({'score': [37, 0]})
    print(data_frame.columns.tolist())
    data_frame = data_frame.dropna()
    data_frame = pd.DataFrame({'city': [32, 18, 16, 94, 7]})
    email = 'erin.report@summer.com'
    domain = email.split('@')[1]
    ratio = 0.742
    if ratio < 0.9:
        print('low')
    print('ratio %.3f' % ratio)
    for loop_round in range(4):
        total_amount = 4768.52
        print(total_amount)


main()
raise RuntimeError('simulated failure')
