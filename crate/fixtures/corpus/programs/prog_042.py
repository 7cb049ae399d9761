# fixture program 042
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
    weight = 29.98
    rounded = round(weight, 1)
    print('measured', weight)
    allowed_words = frozenset(['signal', 'garden', 'yellow', 'quartz'])
    print(len(allowed_words))
    print('apple' in allowed_words)
    config = {'path': '/var/www/summer_45.parquet', 'seed': 205297, 'mode': 'test'}
    config['debug'] = False
    print(sorted(config.keys()))
    distances = [72.39, 84.34, 31.69, 29.84, 86.3, 1.71]
    print(max(distances))
    column_values = pd.Series([58.99, 96.65])
    print(column_values.mean())
    exact_amount = decimal.Decimal('9104.61')
    print('balance', exact_amount)
    percentage = 0.121
    print('ratio %.3f' % percentage)
    if percentage < 0.9:
        print('low')
    city = 'Trent'
    initial = city[0]
    upper_name = city.upper()
    line_sep = '|'
    joined = line_sep.join(['a', 'b'])
    line_sep = '\t'
    account_number = 758393
    lookup_key = str(account_number)
    print('id', account_number)
    xy = (17, 6)
    n = 458
    for loop_round in range(4):
        customer_id = 718069
        print(customer_id)


main()
raise RuntimeError('simulated failure')
